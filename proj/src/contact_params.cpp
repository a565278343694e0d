#include "pointint/contact_params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pointint/errors.hpp"

namespace pointint {

namespace {

constexpr double kDeterminantTol = 1e-12;
constexpr double kEmbedTol = 1e-12;

using namespace std::complex_literals;

} // namespace

bool SeparatedParams::dirichlet() const { return std::isinf(h); }

std::string family_name(const IntegrableFamily& family) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Delta>) return "delta";
            if constexpr (std::is_same_v<T, AntiDelta>) return "antidelta";
            if constexpr (std::is_same_v<T, Separated>) return "separated";
        },
        family);
}

NonSeparatedParams embed(const Delta& family) {
    return NonSeparatedParams{0.0, 1.0, 0.0, family.c, 1.0};
}

NonSeparatedParams embed(const AntiDelta& family) {
    return NonSeparatedParams{0.0, -1.0, 0.0, family.c, -1.0};
}

ContactParams to_contact_params(const IntegrableFamily& family) {
    return std::visit(
        [](const auto& f) -> ContactParams {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Separated>)
                return SeparatedParams{f.h};
            else
                return embed(f);
        },
        family);
}

std::optional<IntegrableFamily> classify_params(const NonSeparatedParams& params) {
    if (std::abs(params.theta) > kEmbedTol || std::abs(params.b) > kEmbedTol)
        return std::nullopt;
    if (std::abs(params.a - 1.0) <= kEmbedTol && std::abs(params.d - 1.0) <= kEmbedTol)
        return Delta{params.c};
    if (std::abs(params.a + 1.0) <= kEmbedTol && std::abs(params.d + 1.0) <= kEmbedTol)
        return AntiDelta{params.c};
    return std::nullopt;
}

NonSeparatedParams validate_nonseparated(const NonSeparatedParams& params) {
    const double residual = params.determinant_residual();
    if (residual != 0.0 && std::abs(residual) > kDeterminantTol) {
        std::ostringstream msg;
        msg << "boundary parameters violate ad - bc = 1, residual " << residual;
        throw ValidationError(msg.str(), residual);
    }
    NonSeparatedParams out = params;
    out.theta = std::remainder(params.theta, 2.0 * M_PI);
    if (out.theta <= -M_PI) out.theta = M_PI;
    return out;
}

SeparatedParams validate_separated(double h_plus, double h_minus) {
    if (std::isinf(h_plus) && std::isinf(h_minus)) return SeparatedParams{std::abs(h_plus)};
    if (std::isinf(h_plus) != std::isinf(h_minus) || h_plus != -h_minus) {
        const double residual = h_plus + h_minus;
        std::ostringstream msg;
        msg << "separated boundary conditions require h_+ = -h_- "
               "(two-body system contradictory), got h_+ = "
            << h_plus << ", h_- = " << h_minus;
        throw ValidationError(msg.str(), residual);
    }
    return SeparatedParams{h_plus};
}

namespace {

// Assembles and solves the square system for (alpha_21, P alpha_21).
// Left-hand blocks are scalar multiples of the identity; the permutation
// operator only enters through the known alpha_12 side.
Matrix solve_two_body(Complex l11, Complex l12, Complex l21, Complex l22,
                      const Matrix& rhs1, const Matrix& rhs2, Eigen::Index dim) {
    const Complex det = l11 * l22 - l12 * l21;
    const double scale = std::abs(l11) + std::abs(l12) + std::abs(l21) + std::abs(l22);
    if (std::abs(det) < 1e-13 * (1.0 + scale * scale))
        throw PoleError("two-body system singular at this momentum", det);

    Matrix lhs = Matrix::Zero(2 * dim, 2 * dim);
    lhs.topLeftCorner(dim, dim) = l11 * Matrix::Identity(dim, dim);
    lhs.topRightCorner(dim, dim) = l12 * Matrix::Identity(dim, dim);
    lhs.bottomLeftCorner(dim, dim) = l21 * Matrix::Identity(dim, dim);
    lhs.bottomRightCorner(dim, dim) = l22 * Matrix::Identity(dim, dim);

    Matrix rhs(2 * dim, dim);
    rhs.topRows(dim) = rhs1;
    rhs.bottomRows(dim) = rhs2;

    const Matrix solution = lhs.partialPivLu().solve(rhs);
    return solution.topRows(dim);
}

Matrix oracle_nonseparated(const NonSeparatedParams& p, Complex k12, const SpinSystem& system) {
    const Eigen::Index dim = system.dimension();
    const Matrix swap = statistics_operator(system, 1, 2);
    const Matrix id = Matrix::Identity(dim, dim);
    const Complex phase = std::polar(1.0, p.theta);
    const Complex ik = 1i * k12;

    // E1: alpha_12 + alpha_21 = e^{i theta} P [(a + i b k) alpha_12 + (a - i b k) alpha_21]
    // E2: i k (alpha_21 - alpha_12) = e^{i theta} P [(c + i d k) alpha_12 + (c - i d k) alpha_21]
    // Unknowns u = alpha_21, v = P alpha_21:
    //   1 * u - e^{i theta}(a - i b k) * v = (-I + e^{i theta}(a + i b k) P) alpha_12
    //   ik * u - e^{i theta}(c - i d k) * v = (ik I + e^{i theta}(c + i d k) P) alpha_12
    const Complex l11 = 1.0;
    const Complex l12 = -phase * (p.a - 1i * p.b * k12);
    const Complex l21 = ik;
    const Complex l22 = -phase * (p.c - 1i * p.d * k12);
    const Matrix rhs1 = -id + phase * (p.a + 1i * p.b * k12) * swap;
    const Matrix rhs2 = ik * id + phase * (p.c + 1i * p.d * k12) * swap;
    return solve_two_body(l11, l12, l21, l22, rhs1, rhs2, dim);
}

Matrix oracle_separated(const SeparatedParams& p, Complex k12, const SpinSystem& system) {
    const Eigen::Index dim = system.dimension();
    const Matrix swap = statistics_operator(system, 1, 2);
    const Matrix id = Matrix::Identity(dim, dim);
    const Complex ik = 1i * k12;

    if (p.dirichlet()) {
        // phi vanishes on both sides: alpha_12 + alpha_21 = 0 and the
        // swapped copy of the same condition.
        return solve_two_body(1.0, 0.0, 0.0, 1.0, -id, -swap, dim);
    }

    // h_+ = h, h_- = -h:
    // E1: ik(alpha_21 - alpha_12) = h (alpha_12 + alpha_21)
    // E2: ik P(alpha_12 - alpha_21) = -h P(alpha_12 + alpha_21)
    const Complex l11 = ik - p.h;
    const Complex l12 = 0.0;
    const Complex l21 = 0.0;
    const Complex l22 = ik - p.h;
    const Matrix rhs1 = (ik + p.h) * id;
    const Matrix rhs2 = (ik + p.h) * swap;
    return solve_two_body(l11, l12, l21, l22, rhs1, rhs2, dim);
}

} // namespace

Matrix two_body_relation_oracle(const ContactParams& params, Complex k12,
                                const SpinSystem& system) {
    if (system.particles() != 2)
        throw std::invalid_argument("two-body oracle requires a two-particle system");
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NonSeparatedParams>)
                return oracle_nonseparated(p, k12, system);
            else
                return oracle_separated(p, k12, system);
        },
        params);
}

} // namespace pointint
