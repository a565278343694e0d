#include "pointint/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "pointint/rng.hpp"

namespace pointint {

namespace {

using namespace std::complex_literals;

constexpr double kRankTol = 1e-10;

int pair_slot(int k, int l) { // k > l, both 1-based
    return (k - 1) * (k - 2) / 2 + (l - 1);
}

} // namespace

std::vector<Complex> bound_momenta(int particles, double h) {
    if (particles < 2) throw std::domain_error("bound momenta require N >= 2");
    std::vector<Complex> k(particles);
    for (int j = 1; j <= particles; ++j)
        k[j - 1] = Complex(0.0, h * (particles + 1 - 2 * j) + 0.0);
    return k;
}

double bound_energy(int particles, double h) {
    if (particles < 1) throw std::domain_error("bound energy requires N >= 1");
    const double n = particles;
    return -h * h / 3.0 * n * (n * n - 1.0);
}

EpsilonPattern::EpsilonPattern(int particles, std::vector<int> signs)
    : particles_(particles), signs_(std::move(signs)) {
    if (static_cast<int>(signs_.size()) != pair_count(particles))
        throw std::invalid_argument("epsilon pattern needs N(N-1)/2 signs");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("epsilon signs must be +-1");
}

EpsilonPattern EpsilonPattern::from_index(int particles, std::uint64_t index) {
    const int pairs = pair_count(particles);
    if (pairs > 62) throw std::invalid_argument("too many pairs for pattern indexing");
    if (index >= (1ULL << pairs)) throw std::invalid_argument("pattern index out of range");
    std::vector<int> signs(pairs);
    for (int bit = 0; bit < pairs; ++bit) signs[bit] = (index >> bit) & 1 ? -1 : 1;
    return EpsilonPattern(particles, std::move(signs));
}

std::uint64_t EpsilonPattern::pattern_count(int particles) {
    return 1ULL << pair_count(particles);
}

int EpsilonPattern::sign(int k, int l) const {
    if (k == l || k < 1 || l < 1 || k > particles_ || l > particles_)
        throw std::domain_error("pair indices out of range");
    if (k < l) std::swap(k, l);
    return signs_[pair_slot(k, l)];
}

std::string EpsilonPattern::to_string() const {
    std::string out;
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

std::vector<Vector> spin_eigenspace(const SpinSystem& system, const EpsilonPattern& pattern) {
    if (pattern.particles() != system.particles())
        throw std::invalid_argument("pattern and system particle counts differ");
    const Eigen::Index dim = system.dimension();
    const int pairs = EpsilonPattern::pair_count(system.particles());
    Matrix stacked(pairs * dim, dim);
    int row = 0;
    for (int k = 2; k <= system.particles(); ++k)
        for (int l = 1; l < k; ++l) {
            stacked.middleRows(row * dim, dim) =
                statistics_operator(system, l, k) -
                static_cast<double>(pattern.sign(k, l)) * Matrix::Identity(dim, dim);
            ++row;
        }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = kRankTol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= cutoff) basis.push_back(svd.matrixV().col(i));
    return basis;
}

BoundState bound_wavefunction(const SpinSystem& system, double h,
                              const EpsilonPattern& pattern, const Vector& spin) {
    if (!(h < 0.0)) throw std::domain_error("bound states require h < 0");
    if (spin.size() != system.dimension())
        throw std::invalid_argument("spin vector has wrong dimension");
    if (spin.norm() < 1e-12) throw std::invalid_argument("spin vector must be nonzero");
    // Membership in the simultaneous eigenspace.
    for (int k = 2; k <= system.particles(); ++k)
        for (int l = 1; l < k; ++l) {
            const Vector r = statistics_operator(system, l, k) * spin -
                             static_cast<double>(pattern.sign(k, l)) * spin;
            if (r.cwiseAbs().maxCoeff() > 1e-10 * spin.norm()) {
                std::ostringstream msg;
                msg << "spin vector is not an epsilon eigenvector for pair (" << k << ","
                    << l << ")";
                throw std::domain_error(msg.str());
            }
        }
    return BoundState{system, h, bound_momenta(system.particles(), h),
                      bound_energy(system.particles(), h), pattern, spin};
}

namespace {

double exponent_sum(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) s += std::abs(x[i] - x[j]);
    return s;
}

// Product of the step-function factors with an override for the meeting
// pair: side = +1 selects theta(x_j - x_i) -> 1, side = -1 -> eps_{ji}.
double theta_product(const BoundState& state, std::span<const double> x, int site_i,
                     int site_j, int side) {
    double prod = 1.0;
    const int n = state.system.particles();
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l) {
            if (k == site_j && l == site_i) {
                prod *= side > 0 ? 1.0 : state.pattern.sign(k, l);
                continue;
            }
            const double diff = x[k - 1] - x[l - 1];
            prod *= diff > 0.0 ? 1.0 : state.pattern.sign(k, l);
        }
    return prod;
}

} // namespace

Vector bound_evaluate(const BoundState& state, std::span<const double> x) {
    const int n = state.system.particles();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("coordinate count does not match particle count");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(x[i] - x[j]) < 1e-12)
                throw std::domain_error(
                    "coincident coordinates lie on a hyperplane; use one-sided data");
    double prod = 1.0;
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l)
            prod *= (x[k - 1] - x[l - 1]) > 0.0 ? 1.0 : state.pattern.sign(k, l);
    return prod * std::exp(state.h * exponent_sum(x)) * state.spin;
}

OneSidedData bound_one_sided(const BoundState& state, int site_i, int site_j,
                             std::span<const double> base) {
    const int n = state.system.particles();
    if (site_i < 1 || site_j <= site_i || site_j > n)
        throw std::domain_error("pair indices must satisfy 1 <= i < j <= N");
    if (static_cast<int>(base.size()) != n)
        throw std::invalid_argument("coordinate count does not match particle count");
    const int ia = site_i - 1, ib = site_j - 1;
    if (std::abs(base[ia] - base[ib]) > 1e-12 * (1.0 + std::abs(base[ia])))
        throw std::domain_error("base point is not on the pair hyperplane");
    for (int m = 0; m < n; ++m) {
        if (m == ia || m == ib) continue;
        if (std::abs(base[m] - base[ia]) < 1e-6)
            throw std::invalid_argument("other coordinates must stay away from the pair");
    }

    const double expo = std::exp(state.h * exponent_sum(base));
    OneSidedData data;
    for (int side : {+1, -1}) {
        const double thetas = theta_product(state, base, site_i, site_j, side);
        const Vector value = thetas * expo * state.spin;
        // (d_{x_j} - d_{x_i})/2 of h sum |.|: the meeting pair contributes
        // h * side; the remaining sign sums cancel pairwise at the base point
        // but are evaluated honestly here.
        double sum_j = side, sum_i = -side;
        for (int m = 0; m < n; ++m) {
            if (m == ia || m == ib) continue;
            sum_j += base[ib] - base[m] > 0.0 ? 1.0 : -1.0;
            sum_i += base[ia] - base[m] > 0.0 ? 1.0 : -1.0;
        }
        const double deriv_factor = 0.5 * state.h * (sum_j - sum_i);
        if (side > 0) {
            data.value_plus = value;
            data.deriv_plus = deriv_factor * value;
        } else {
            data.value_minus = value;
            data.deriv_minus = deriv_factor * value;
        }
    }
    return data;
}

namespace {

double vec_max(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// Relative residual of the separated conditions; bound-state amplitudes are
// exponentially small, so the scale floor is the data itself, not 1.
double separated_residual(double h, const OneSidedData& data) {
    const double scale = std::max({vec_max(data.value_plus), vec_max(data.value_minus),
                                   vec_max(data.deriv_plus), vec_max(data.deriv_minus)});
    if (scale == 0.0) return 0.0;
    const double r1 = vec_max(data.deriv_plus - h * data.value_plus);
    const double r2 = vec_max(data.deriv_minus + h * data.value_minus);
    return std::max(r1, r2) / scale;
}

std::vector<double> sample_pair_base(Rng& rng, int n, int ia, int ib) {
    std::vector<double> x(n);
    const double meet = rng.uniform(-1.5, 1.5);
    x[ia] = meet;
    x[ib] = meet;
    std::vector<double> placed{meet};
    for (int m = 0; m < n; ++m) {
        if (m == ia || m == ib) continue;
        for (;;) {
            const double candidate = rng.uniform(-2.0, 2.0);
            bool ok = true;
            for (double p : placed)
                if (std::abs(candidate - p) < 0.2) ok = false;
            if (ok) {
                x[m] = candidate;
                placed.push_back(candidate);
                break;
            }
        }
    }
    return x;
}

std::vector<double> sample_open(Rng& rng, int n, double gap) {
    std::vector<double> x(n);
    for (int m = 0; m < n; ++m) {
        for (;;) {
            const double candidate = rng.uniform(-2.0, 2.0);
            bool ok = true;
            for (int l = 0; l < m; ++l)
                if (std::abs(candidate - x[l]) < gap) ok = false;
            if (ok) {
                x[m] = candidate;
                break;
            }
        }
    }
    return x;
}

} // namespace

BoundVerification verify_bound_state(const BoundState& state, int trials, double tol,
                                     std::uint64_t seed, bool parallel) {
    const int n = state.system.particles();
    BoundVerification report;
    report.tol = tol;

    // (i) Boundary conditions at every pair hyperplane.
    struct PairIndex {
        int i, j;
    };
    std::vector<PairIndex> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    const int total = static_cast<int>(pairs.size()) * trials;
    double worst_boundary = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst_boundary) if (parallel)
    for (int sample = 0; sample < total; ++sample) {
        const PairIndex pair = pairs[sample / trials];
        Rng rng(mix_seed(seed, sample));
        const auto base = sample_pair_base(rng, n, pair.i - 1, pair.j - 1);
        const auto data = bound_one_sided(state, pair.i, pair.j, base);
        worst_boundary = std::max(worst_boundary, separated_residual(state.h, data));
    }
    report.max_boundary_residual = worst_boundary;

    // (ii) -sum d^2 psi = E psi in open regions: with g_m = h sum_l sgn(x_m - x_l)
    // the analytic action on the exponential is sum g_m^2.
    double worst_energy = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, 0xE0, t));
        const auto x = sample_open(rng, n, 0.1);
        double sum_g2 = 0.0;
        for (int m = 0; m < n; ++m) {
            double g = 0.0;
            for (int l = 0; l < n; ++l)
                if (l != m) g += x[m] - x[l] > 0.0 ? 1.0 : -1.0;
            g *= state.h;
            sum_g2 += g * g;
        }
        worst_energy =
            std::max(worst_energy, std::abs(-sum_g2 - state.energy) /
                                       std::max(1.0, std::abs(state.energy)));
    }
    // Ladder consistency sum k_j^2 = E.
    Complex ladder = 0.0;
    for (Complex k : state.momenta) ladder += k * k;
    worst_energy = std::max(worst_energy, std::abs(ladder - state.energy) /
                                              std::max(1.0, std::abs(state.energy)));
    report.max_energy_residual = worst_energy;

    // (iii) In the region x_1 < ... < x_N the exponent h sum_{i>j} (x_i - x_j)
    // assigns x_m the coefficient h(2m - 1 - N), which must equal i k_m.
    double worst_exponent = 0.0;
    for (int m = 1; m <= n; ++m) {
        const Complex coeff = 1i * state.momenta[m - 1];
        const double expected = state.h * (2.0 * m - 1.0 - n);
        worst_exponent = std::max(worst_exponent, std::abs(coeff - expected));
    }
    report.max_exponent_residual = worst_exponent;

    // (iv) Decay along random rays in the center-of-mass hyperplane.
    bool decay_ok = true;
    const int rays = 20;
    for (int r = 0; r < rays && decay_ok; ++r) {
        Rng rng(mix_seed(seed, 0xDE, r));
        std::vector<double> w = sample_open(rng, n, 0.2);
        const double mean = std::accumulate(w.begin(), w.end(), 0.0) / n;
        for (double& v : w) v -= mean;
        double prev = -1.0;
        for (int step = 1; step <= 5; ++step) {
            std::vector<double> x(n);
            for (int m = 0; m < n; ++m) x[m] = step * w[m];
            const double mag = bound_evaluate(state, x).norm();
            if (prev >= 0.0 && mag >= prev) decay_ok = false;
            prev = mag;
        }
    }
    report.decay_ok = decay_ok;

    report.pass = report.max_boundary_residual <= tol && report.max_energy_residual <= tol &&
                  report.max_exponent_residual <= tol && report.decay_ok;
    return report;
}

} // namespace pointint
