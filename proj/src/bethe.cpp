#include "pointint/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pointint/errors.hpp"
#include "pointint/rng.hpp"

namespace pointint {

namespace {

using namespace std::complex_literals;

constexpr int kMaxParticlesForTable = 6;

double vec_max(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void check_momenta(const std::vector<Complex>& momenta, int particles) {
    if (static_cast<int>(momenta.size()) != particles)
        throw std::invalid_argument("momentum count does not match particle count");
    for (std::size_t i = 0; i < momenta.size(); ++i)
        for (std::size_t j = i + 1; j < momenta.size(); ++j)
            if (std::abs(momenta[i] - momenta[j]) < 1e-12)
                throw std::invalid_argument("Bethe momenta must be pairwise distinct");
}

std::vector<int> word_from_sort(std::vector<int> arr, bool reverse_passes) {
    const int n = static_cast<int>(arr.size());
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        if (!reverse_passes) {
            for (int pos = 0; pos + 1 < n; ++pos)
                if (arr[pos] > arr[pos + 1]) {
                    std::swap(arr[pos], arr[pos + 1]);
                    swaps.push_back(pos);
                    changed = true;
                }
        } else {
            for (int pos = n - 2; pos >= 0; --pos)
                if (arr[pos] > arr[pos + 1]) {
                    std::swap(arr[pos], arr[pos + 1]);
                    swaps.push_back(pos);
                    changed = true;
                }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

} // namespace

std::vector<int> bubble_word(std::span<const int> arrangement) {
    return word_from_sort(std::vector<int>(arrangement.begin(), arrangement.end()), false);
}

std::vector<int> reverse_bubble_word(std::span<const int> arrangement) {
    return word_from_sort(std::vector<int>(arrangement.begin(), arrangement.end()), true);
}

CoefficientTable::CoefficientTable(IntegrableFamily family, std::vector<Complex> momenta,
                                   const SpinSystem& system, const Vector& initial,
                                   WordOrder order)
    : family_(std::move(family)), momenta_(std::move(momenta)), system_(system) {
    if (system.particles() > kMaxParticlesForTable)
        throw std::invalid_argument("coefficient tables are limited to N <= 6");
    check_momenta(momenta_, system.particles());
    if (initial.size() != system.dimension())
        throw std::invalid_argument("initial coefficient has wrong dimension");

    const int n = system.particles();
    std::vector<int> arr(n);
    std::iota(arr.begin(), arr.end(), 0);
    do {
        arrangements_.push_back(arr);
    } while (std::next_permutation(arr.begin(), arr.end()));

    coefficients_.reserve(arrangements_.size());
    words_.reserve(arrangements_.size());
    for (const auto& target : arrangements_) {
        std::vector<int> word = order == WordOrder::Bubble ? bubble_word(target)
                                                           : reverse_bubble_word(target);
        std::vector<int> current(n);
        std::iota(current.begin(), current.end(), 0);
        Vector coeff = initial;
        for (int pos : word) {
            const Complex k_diff = momenta_[current[pos]] - momenta_[current[pos + 1]];
            const YOperator y = y_family(family_, k_diff, system_, pos + 1);
            coeff = y.matrix * coeff;
            std::swap(current[pos], current[pos + 1]);
        }
        if (current != target)
            throw std::logic_error("reduced word does not reach its arrangement");
        coefficients_.push_back(std::move(coeff));
        words_.push_back(std::move(word));
    }
}

std::size_t CoefficientTable::rank(std::span<const int> arrangement) const {
    const int n = system_.particles();
    if (static_cast<int>(arrangement.size()) != n)
        throw std::invalid_argument("arrangement length does not match particle count");
    // Lexicographic rank via the Lehmer code.
    std::size_t factorial = 1;
    for (int i = 2; i < n; ++i) factorial *= i;
    std::size_t r = 0;
    std::size_t f = factorial;
    for (int i = 0; i < n - 1; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (arrangement[j] < arrangement[i]) ++smaller;
        r += smaller * f;
        if (n - 1 - i > 1) f /= (n - 1 - i);
    }
    return r;
}

const Vector& CoefficientTable::entry(std::span<const int> arrangement) const {
    return coefficients_[rank(arrangement)];
}

CoefficientTable build_coefficient_table(const IntegrableFamily& family,
                                         const std::vector<Complex>& momenta,
                                         const SpinSystem& system, const Vector& initial,
                                         WordOrder order) {
    return CoefficientTable(family, momenta, system, initial, order);
}

double path_independence_residual(const IntegrableFamily& family,
                                  const std::vector<Complex>& momenta,
                                  const SpinSystem& system, const Vector& initial) {
    const CoefficientTable forward(family, momenta, system, initial, WordOrder::Bubble);
    const CoefficientTable backward(family, momenta, system, initial,
                                    WordOrder::ReverseBubble);
    double worst = 0.0;
    for (std::size_t i = 0; i < forward.size(); ++i)
        worst = std::max(worst, vec_max(forward.coefficient(i) - backward.coefficient(i)));
    return worst;
}

Complex WaveFunction::energy() const {
    Complex e = 0.0;
    for (Complex k : table_.momenta()) e += k * k;
    return e;
}

WaveFunction make_wavefunction(const IntegrableFamily& family,
                               const std::vector<Complex>& momenta, const SpinSystem& system,
                               const Vector& initial, WordOrder order) {
    return WaveFunction(CoefficientTable(family, momenta, system, initial, order));
}

namespace {

// N!-term sum in the fundamental region, evaluated at sorted coordinates z.
Vector evaluate_fundamental(const CoefficientTable& table, std::span<const double> z) {
    Vector acc = Vector::Zero(table.system().dimension());
    const auto& momenta = table.momenta();
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const auto& arr = table.arrangements()[idx];
        Complex exponent = 0.0;
        for (std::size_t m = 0; m < arr.size(); ++m) exponent += momenta[arr[m]] * z[m];
        acc += std::exp(1i * exponent) * table.coefficient(idx);
    }
    return acc;
}

std::vector<int> sorting_permutation(std::span<const double> x, int tie_first = -1,
                                     int tie_second = -1) {
    std::vector<int> sigma(x.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::sort(sigma.begin(), sigma.end(), [&](int lhs, int rhs) {
        if (x[lhs] != x[rhs]) return x[lhs] < x[rhs];
        // Ties occur only for the designated hyperplane pair.
        const auto tie_rank = [&](int idx) {
            if (idx == tie_first) return 0;
            if (idx == tie_second) return 1;
            return 2;
        };
        return tie_rank(lhs) < tie_rank(rhs);
    });
    return sigma;
}

std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t m = 0; m < perm.size(); ++m) inv[perm[m]] = static_cast<int>(m);
    return inv;
}

double statistics_sign_of(const SpinSystem& system, const std::vector<int>& perm) {
    return system.statistics() == Statistics::Fermion
               ? static_cast<double>(permutation_parity(perm))
               : 1.0;
}

// Region evaluation: psi(x) = eps(sigma) R_{sigma^{-1}} psi_fund(x o sigma).
Vector evaluate_region(const WaveFunction& wavefn, std::span<const double> x,
                       const std::vector<int>& sigma) {
    const auto& system = wavefn.system();
    std::vector<double> z(x.size());
    for (std::size_t m = 0; m < x.size(); ++m) z[m] = x[sigma[m]];
    const Vector fund = evaluate_fundamental(wavefn.table(), z);
    const std::vector<int> sigma_inv = invert(sigma);
    return statistics_sign_of(system, sigma) *
           apply_site_permutation(system, sigma_inv, fund);
}

} // namespace

Vector evaluate(const WaveFunction& wavefn, std::span<const double> x) {
    const int n = wavefn.system().particles();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("coordinate count does not match particle count");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(x[i] - x[j]) < 1e-12)
                throw std::domain_error(
                    "coincident coordinates lie on a hyperplane; use one-sided data");
    return evaluate_region(wavefn, x, sorting_permutation(x));
}

OneSidedData one_sided_data(const WaveFunction& wavefn, int pair, std::span<const double> base) {
    const auto& system = wavefn.system();
    const int n = system.particles();
    if (pair < 1 || pair >= n) throw std::domain_error("adjacent pair index out of range");
    if (static_cast<int>(base.size()) != n)
        throw std::invalid_argument("coordinate count does not match particle count");
    const int ia = pair - 1, ib = pair;
    if (std::abs(base[ia] - base[ib]) > 1e-12 * (1.0 + std::abs(base[ia])))
        throw std::domain_error("base point is not on the hyperplane x_i = x_{i+1}");
    for (int m = 0; m < n; ++m) {
        if (m == ia || m == ib) continue;
        if (std::abs(base[m] - base[ia]) < 1e-6)
            throw std::invalid_argument("other coordinates must stay away from the pair");
        for (int l = m + 1; l < n; ++l)
            if (l != ia && l != ib && std::abs(base[m] - base[l]) < 1e-6)
                throw std::invalid_argument("other coordinates must be pairwise distinct");
    }

    const auto& table = wavefn.table();
    const auto& momenta = table.momenta();
    OneSidedData data;
    for (int side = 0; side < 2; ++side) {
        const bool plus = side == 0;
        // On the + side of the relative coordinate x_{i+1} - x_i the pair
        // sorts as (i, i+1); on the - side as (i+1, i).
        const std::vector<int> sigma = plus ? sorting_permutation(base, ia, ib)
                                            : sorting_permutation(base, ib, ia);
        const std::vector<int> sigma_inv = invert(sigma);
        std::vector<double> z(base.size());
        for (std::size_t m = 0; m < base.size(); ++m) z[m] = base[sigma[m]];

        Vector value = Vector::Zero(system.dimension());
        Vector deriv = Vector::Zero(system.dimension());
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            const auto& arr = table.arrangements()[idx];
            Complex exponent = 0.0;
            for (std::size_t m = 0; m < arr.size(); ++m) exponent += momenta[arr[m]] * z[m];
            const Complex phase = std::exp(1i * exponent);
            // Relative derivative (d_{x_{i+1}} - d_{x_i})/2 of the term.
            const Complex factor =
                0.5i * (momenta[arr[sigma_inv[ib]]] - momenta[arr[sigma_inv[ia]]]);
            value += phase * table.coefficient(idx);
            deriv += factor * phase * table.coefficient(idx);
        }
        const double sign = statistics_sign_of(system, sigma);
        Vector v = sign * apply_site_permutation(system, sigma_inv, value);
        Vector d = sign * apply_site_permutation(system, sigma_inv, deriv);
        if (plus) {
            data.value_plus = std::move(v);
            data.deriv_plus = std::move(d);
        } else {
            data.value_minus = std::move(v);
            data.deriv_minus = std::move(d);
        }
    }
    return data;
}

double boundary_residual(const IntegrableFamily& family, const OneSidedData& data) {
    const double scale =
        std::max({1.0, vec_max(data.value_plus), vec_max(data.value_minus),
                  vec_max(data.deriv_plus), vec_max(data.deriv_minus)});
    return std::visit(
               [&](const auto& f) -> double {
                   using T = std::decay_t<decltype(f)>;
                   if constexpr (std::is_same_v<T, Delta>) {
                       const double r1 = vec_max(data.value_plus - data.value_minus);
                       const double r2 = vec_max(data.deriv_plus - data.deriv_minus -
                                                 f.c * data.value_minus);
                       return std::max(r1, r2);
                   } else if constexpr (std::is_same_v<T, AntiDelta>) {
                       const double r1 = vec_max(data.value_plus + data.value_minus);
                       const double r2 = vec_max(data.deriv_plus + data.deriv_minus -
                                                 f.c * data.value_minus);
                       return std::max(r1, r2);
                   } else {
                       if (std::isinf(f.h))
                           return std::max(vec_max(data.value_plus),
                                           vec_max(data.value_minus));
                       const double r1 =
                           vec_max(data.deriv_plus - f.h * data.value_plus);
                       const double r2 =
                           vec_max(data.deriv_minus + f.h * data.value_minus);
                       return std::max(r1, r2);
                   }
               },
               family) /
           scale;
}

namespace {

// Hyperplane base point for the pair (pair, pair+1): the pair meets at a
// random value, the other coordinates keep gaps >= 0.2 from it and from
// each other.
std::vector<double> sample_base_point(Rng& rng, int n, int pair) {
    std::vector<double> x(n);
    const double meet = rng.uniform(-2.0, 2.0);
    x[pair - 1] = meet;
    x[pair] = meet;
    std::vector<double> placed{meet};
    for (int m = 0; m < n; ++m) {
        if (m == pair - 1 || m == pair) continue;
        for (;;) {
            const double candidate = rng.uniform(-2.5, 2.5);
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

std::vector<double> sample_open_point(Rng& rng, int n, double gap = 0.1) {
    std::vector<double> x(n);
    for (int m = 0; m < n; ++m) {
        for (;;) {
            const double candidate = rng.uniform(-2.5, 2.5);
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

std::vector<int> sample_permutation(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    return perm;
}

} // namespace

BoundaryReport check_boundary_conditions(const WaveFunction& wavefn, int trials, double tol,
                                         std::uint64_t seed, bool parallel) {
    const int n = wavefn.system().particles();
    const int pairs = n - 1;
    const int total = pairs * trials;
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (parallel)
    for (int sample = 0; sample < total; ++sample) {
        const int pair = 1 + sample / trials;
        const int trial = sample % trials;
        Rng rng(mix_seed(seed, pair, trial));
        const auto base = sample_base_point(rng, n, pair);
        const auto data = one_sided_data(wavefn, pair, base);
        worst = std::max(worst, boundary_residual(wavefn.table().family(), data));
    }
    BoundaryReport report;
    report.max_residual = worst;
    report.samples = total;
    report.tol = tol;
    report.pass = worst <= tol;
    return report;
}

double statistics_residual(const WaveFunction& wavefn, int trials, std::uint64_t seed) {
    const auto& system = wavefn.system();
    const int n = system.particles();
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, 77, t));
        const auto x = sample_open_point(rng, n);
        const auto tau = sample_permutation(rng, n);
        std::vector<double> permuted(n);
        for (int m = 0; m < n; ++m) permuted[m] = x[tau[m]];
        const Vector lhs = evaluate(wavefn, permuted);
        const Vector base = evaluate(wavefn, x);
        const double sign = statistics_sign_of(system, tau);
        const Vector rhs = sign * apply_site_permutation(system, tau, base);
        const double scale = std::max(1.0, vec_max(base));
        worst = std::max(worst, vec_max(lhs - rhs) / scale);
    }
    return worst;
}

KinkGaugeReport kink_gauge_check(const WaveFunction& wavefn, int trials, double tol,
                                 std::uint64_t seed) {
    const auto& system = wavefn.system();
    if (!std::holds_alternative<Delta>(wavefn.table().family()))
        throw std::invalid_argument("kink gauge check expects a delta-family wavefunction");
    if (system.statistics() != Statistics::Boson)
        throw std::invalid_argument("kink gauge check expects boson statistics");
    const double c = std::get<Delta>(wavefn.table().family()).c;
    const int n = system.particles();

    KinkGaugeReport report;
    report.dual_strength = -c;
    report.tol = tol;

    // Boundary conditions of the transformed wavefunction, checked against
    // the anti-delta family with strength -c. Near the hyperplane of the
    // meeting pair the kink factor is the pair's own sign times a constant
    // u built from the remaining pairs.
    const IntegrableFamily dual = AntiDelta{-c};
    double worst_boundary = 0.0;
    for (int pair = 1; pair < n; ++pair) {
        for (int t = 0; t < trials; ++t) {
            Rng rng(mix_seed(seed, pair, t));
            const auto base = sample_base_point(rng, n, pair);
            const auto data = one_sided_data(wavefn, pair, base);
            double u = 1.0;
            for (int k = 1; k < n; ++k)
                for (int l = 0; l < k; ++l) {
                    if (k == pair && l == pair - 1) continue;
                    u *= base[k] > base[l] ? 1.0 : -1.0;
                }
            OneSidedData kinked;
            kinked.value_plus = u * data.value_plus;
            kinked.deriv_plus = u * data.deriv_plus;
            kinked.value_minus = -u * data.value_minus;
            kinked.deriv_minus = -u * data.deriv_minus;
            worst_boundary = std::max(worst_boundary, boundary_residual(dual, kinked));
        }
    }
    report.max_boundary_residual = worst_boundary;

    // The transformed wavefunction obeys fermion exchange symmetry.
    double worst_stat = 0.0;
    const auto kink_factor = [n](std::span<const double> x) {
        double u = 1.0;
        for (int k = 1; k < n; ++k)
            for (int l = 0; l < k; ++l) u *= x[k] > x[l] ? 1.0 : -1.0;
        return u;
    };
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, 911, t));
        const auto x = sample_open_point(rng, n);
        const auto tau = sample_permutation(rng, n);
        std::vector<double> permuted(n);
        for (int m = 0; m < n; ++m) permuted[m] = x[tau[m]];
        const Vector lhs = kink_factor(permuted) * evaluate(wavefn, permuted);
        const Vector base = kink_factor(x) * evaluate(wavefn, x);
        const double sign = permutation_parity(tau);
        const Vector rhs = sign * apply_site_permutation(system, tau, base);
        const double scale = std::max(1.0, vec_max(base));
        worst_stat = std::max(worst_stat, vec_max(lhs - rhs) / scale);
    }
    report.max_statistics_residual = worst_stat;

    report.pass = report.max_boundary_residual <= tol && report.max_statistics_residual <= tol;
    return report;
}

} // namespace pointint
