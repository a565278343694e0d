#include "pointint/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "pointint/yops.hpp"

namespace pointint {

namespace {

void check_momenta(std::span<const Complex> momenta, const SpinSystem& system) {
    if (static_cast<int>(momenta.size()) != system.particles())
        throw std::invalid_argument("momentum count does not match particle count");
    for (std::size_t i = 0; i < momenta.size(); ++i)
        for (std::size_t j = i + 1; j < momenta.size(); ++j)
            if (std::abs(momenta[i] - momenta[j]) < 1e-12)
                throw std::invalid_argument("scattering momenta must be pairwise distinct");
}

} // namespace

Matrix x_operator(const IntegrableFamily& family, std::span<const Complex> momenta, int i,
                  int j, const SpinSystem& system) {
    check_momenta(momenta, system);
    if (i == j) throw std::domain_error("X operator needs two distinct particles");
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo < 1 || hi > system.particles()) throw std::domain_error("site index out of range");
    const Complex k_diff = momenta[i - 1] - momenta[j - 1];
    return y_pair_matrix(family, k_diff, system, lo, hi) *
           statistics_operator(system, lo, hi);
}

SMatrix s_matrix(const IntegrableFamily& family, const std::vector<Complex>& momenta,
                 const SpinSystem& system) {
    check_momenta(momenta, system);
    const int n = system.particles();
    Matrix s = Matrix::Identity(system.dimension(), system.dimension());
    for (int j = 1; j <= n - 1; ++j)
        for (int i = j + 1; i <= n; ++i) s = s * x_operator(family, momenta, i, j, system);
    return SMatrix{system, momenta, family, std::move(s)};
}

SMatrix s_matrix_via_sprime(const IntegrableFamily& family,
                            const std::vector<Complex>& momenta, const SpinSystem& system) {
    check_momenta(momenta, system);
    const int n = system.particles();

    // S' = [Y^{12}(k2-k1) Y^{23}(k3-k1) ... Y^{(N-1)N}(kN-k1)]
    //      [Y^{12}(k3-k2) ... Y^{(N-2)(N-1)}(kN-k2)] ... [Y^{12}(kN-k(N-1))]:
    // bracket j walks momentum label j from the last position to position j
    // of the reversed arrangement.
    Matrix sprime = Matrix::Identity(system.dimension(), system.dimension());
    for (int j = 1; j <= n - 1; ++j)
        for (int m = 1; m <= n - j; ++m)
            sprime = sprime * y_pair_matrix(family, momenta[m + j - 1] - momenta[j - 1],
                                            system, m, m + 1);

    // Order reversal as the adjacent chain [P^{12}][P^{23}P^{12}]...
    Matrix reversal = Matrix::Identity(system.dimension(), system.dimension());
    for (int block = 1; block <= n - 1; ++block)
        for (int q = block; q >= 1; --q)
            reversal = reversal * statistics_operator(system, q, q + 1);

    return SMatrix{system, momenta, family, sprime * reversal};
}

std::vector<Complex> cluster_momenta(double h, int size_a, int size_b, double q_a,
                                     double q_b) {
    std::vector<Complex> k;
    k.reserve(size_a + size_b);
    for (int j = 1; j <= size_a; ++j)
        k.push_back(q_a + Complex(0.0, h * (size_a + 1 - 2 * j) + 0.0));
    for (int j = 1; j <= size_b; ++j)
        k.push_back(q_b + Complex(0.0, h * (size_b + 1 - 2 * j) + 0.0));
    return k;
}

Matrix cluster_s_matrix(double h, int size_a, int size_b, double q_a, double q_b,
                        const SpinSystem& system) {
    if (!(h < 0.0)) throw std::domain_error("cluster scattering requires h < 0");
    if (size_a < 1 || size_b < 1) throw std::domain_error("cluster sizes must be >= 1");
    const int n = size_a + size_b;
    if (system.particles() != n)
        throw std::invalid_argument("system size must equal the sum of cluster sizes");
    const std::vector<Complex> momenta = cluster_momenta(h, size_a, size_b, q_a, q_b);
    const IntegrableFamily family = Separated{h};
    Matrix s = Matrix::Identity(system.dimension(), system.dimension());
    for (int j = size_a; j >= 1; --j)
        for (int i = size_a + 1; i <= n; ++i)
            s = s * x_operator(family, momenta, i, j, system);
    return s;
}

SPropertyReport verify_s_properties(const SMatrix& s, double tol) {
    const Matrix id = Matrix::Identity(s.matrix.rows(), s.matrix.cols());
    SPropertyReport report;
    report.unitarity_residual = (s.matrix.adjoint() * s.matrix - id).cwiseAbs().maxCoeff();
    report.symmetry_residual = (s.matrix - s.matrix.transpose()).cwiseAbs().maxCoeff();
    report.tol = tol;
    report.pass = report.unitarity_residual <= tol && report.symmetry_residual <= tol;
    return report;
}

} // namespace pointint
