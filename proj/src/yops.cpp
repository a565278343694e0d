#include "pointint/yops.hpp"

#include <cmath>

#include "pointint/errors.hpp"

namespace pointint {

namespace {

using namespace std::complex_literals;

void check_off_pole(Complex denominator, double numerator_scale) {
    if (std::abs(denominator) < 1e-13 * (1.0 + numerator_scale))
        throw PoleError("Y-operator denominator vanishes", denominator);
}

Matrix y_matrix_nonseparated(const NonSeparatedParams& p, Complex k_diff,
                             const SpinSystem& system, int site_i, int site_j) {
    const Complex k12 = 0.5 * k_diff;
    const Complex phase = std::polar(1.0, p.theta);
    const Complex num_p = 2.0 * 1i * phase * k12;
    const Complex num_s = 1i * k12 * (p.a - p.d) + k12 * k12 * p.b + p.c;
    const Complex den = 1i * k12 * (p.a + p.d) + k12 * k12 * p.b - p.c;
    check_off_pole(den, std::abs(num_p) + std::abs(num_s));
    const Matrix swap = statistics_operator(system, site_i, site_j);
    return (num_p * swap + num_s * Matrix::Identity(system.dimension(), system.dimension())) /
           den;
}

Matrix y_matrix_separated(const SeparatedParams& p, Complex k_diff, const SpinSystem& system) {
    const Eigen::Index dim = system.dimension();
    if (p.dirichlet()) return -Matrix::Identity(dim, dim);
    const Complex num = 1i * k_diff + 2.0 * p.h;
    const Complex den = 1i * k_diff - 2.0 * p.h;
    check_off_pole(den, std::abs(num));
    return (num / den) * Matrix::Identity(dim, dim);
}

Matrix y_matrix_delta(double c, Complex k_diff, const SpinSystem& system, int site_i,
                      int site_j) {
    const Complex num_p = 1i * k_diff;
    const Complex den = 1i * k_diff - c;
    check_off_pole(den, std::abs(num_p) + std::abs(c));
    const Matrix swap = statistics_operator(system, site_i, site_j);
    return (num_p * swap + c * Matrix::Identity(system.dimension(), system.dimension())) / den;
}

Matrix y_matrix_antidelta(double c, Complex k_diff, const SpinSystem& system, int site_i,
                          int site_j) {
    const Complex num_p = 1i * k_diff;
    const Complex den = 1i * k_diff + c;
    check_off_pole(den, std::abs(num_p) + std::abs(c));
    const Matrix swap = statistics_operator(system, site_i, site_j);
    return -(num_p * swap + c * Matrix::Identity(system.dimension(), system.dimension())) /
           den;
}

void check_adjacent_pair(const SpinSystem& system, int pair) {
    if (pair < 1 || pair >= system.particles())
        throw std::domain_error("adjacent pair index out of range");
}

} // namespace

YOperator y_nonseparated(const NonSeparatedParams& params, Complex k_diff,
                         const SpinSystem& system, int pair) {
    check_adjacent_pair(system, pair);
    return {system, pair, k_diff,
            y_matrix_nonseparated(params, k_diff, system, pair, pair + 1)};
}

YOperator y_separated(const SeparatedParams& params, Complex k_diff, const SpinSystem& system,
                      int pair) {
    check_adjacent_pair(system, pair);
    return {system, pair, k_diff, y_matrix_separated(params, k_diff, system)};
}

YOperator y_family(const IntegrableFamily& family, Complex k_diff, const SpinSystem& system,
                   int pair) {
    check_adjacent_pair(system, pair);
    return {system, pair, k_diff, y_pair_matrix(family, k_diff, system, pair, pair + 1)};
}

Matrix y_pair_matrix(const IntegrableFamily& family, Complex k_diff, const SpinSystem& system,
                     int site_i, int site_j) {
    return std::visit(
        [&](const auto& f) -> Matrix {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Delta>)
                return y_matrix_delta(f.c, k_diff, system, site_i, site_j);
            else if constexpr (std::is_same_v<T, AntiDelta>)
                return y_matrix_antidelta(f.c, k_diff, system, site_i, site_j);
            else
                return y_matrix_separated(SeparatedParams{f.h}, k_diff, system);
        },
        family);
}

Matrix y_pair_matrix(const ContactParams& params, Complex k_diff, const SpinSystem& system,
                     int site_i, int site_j) {
    return std::visit(
        [&](const auto& p) -> Matrix {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NonSeparatedParams>)
                return y_matrix_nonseparated(p, k_diff, system, site_i, site_j);
            else
                return y_matrix_separated(p, k_diff, system);
        },
        params);
}

} // namespace pointint
