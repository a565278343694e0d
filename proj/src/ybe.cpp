#include "pointint/ybe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pointint/errors.hpp"
#include "pointint/rng.hpp"
#include "pointint/yops.hpp"

namespace pointint {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void check_distinct(Complex a, Complex b) {
    if (std::abs(a - b) < 1e-12)
        throw std::invalid_argument("coincident momenta are not allowed");
}

} // namespace

double ybe_residual(const ContactParams& params, Complex k1, Complex k2, Complex k3,
                    const SpinSystem& system) {
    if (system.particles() != 3)
        throw std::invalid_argument("ybe_residual requires a three-particle system");
    check_distinct(k1, k2);
    check_distinct(k2, k3);
    check_distinct(k1, k3);

    const Matrix y12_ij = y_pair_matrix(params, k1 - k2, system, 1, 2);
    const Matrix y23_kj = y_pair_matrix(params, k3 - k2, system, 2, 3);
    const Matrix y12_ki = y_pair_matrix(params, k3 - k1, system, 1, 2);
    const Matrix y23_ki = y_pair_matrix(params, k3 - k1, system, 2, 3);
    const Matrix y12_kj = y_pair_matrix(params, k3 - k2, system, 1, 2);
    const Matrix y23_ij = y_pair_matrix(params, k1 - k2, system, 2, 3);

    const Matrix lhs = y12_ij * y23_kj * y12_ki;
    const Matrix rhs = y23_ki * y12_kj * y23_ij;
    return max_abs(lhs - rhs);
}

double ybe_residual(const IntegrableFamily& family, Complex k1, Complex k2, Complex k3,
                    const SpinSystem& system) {
    return ybe_residual(to_contact_params(family), k1, k2, k3, system);
}

double inverse_residual(const ContactParams& params, Complex k_i, Complex k_j,
                        const SpinSystem& system) {
    check_distinct(k_i, k_j);
    const Matrix forward = y_pair_matrix(params, k_i - k_j, system, 1, 2);
    const Matrix backward = y_pair_matrix(params, k_j - k_i, system, 1, 2);
    const Matrix id = Matrix::Identity(system.dimension(), system.dimension());
    return max_abs(forward * backward - id);
}

double commute_residual(const ContactParams& params, const std::array<Complex, 4>& momenta,
                        const SpinSystem& system) {
    if (system.particles() < 4)
        throw std::invalid_argument("commute_residual requires at least four particles");
    check_distinct(momenta[0], momenta[1]);
    check_distinct(momenta[2], momenta[3]);
    const Matrix y12 = y_pair_matrix(params, momenta[0] - momenta[1], system, 1, 2);
    const Matrix y34 = y_pair_matrix(params, momenta[2] - momenta[3], system, 3, 4);
    return max_abs(y12 * y34 - y34 * y12);
}

YbeReport full_ybe_report(const ContactParams& params, Complex k1, Complex k2, Complex k3,
                          int spin_states, Statistics statistics, double tol) {
    YbeReport report;
    report.momenta = {k1, k2, k3};
    report.tol = tol;

    const SpinSystem sys3(3, spin_states, statistics);
    report.residual_ybe1 = ybe_residual(params, k1, k2, k3, sys3);
    report.residual_inverse = inverse_residual(params, k1, k2, sys3);

    const SpinSystem sys4(4, spin_states, statistics);
    const Complex k4 = k3 + (k2 - k1); // fourth spectral point, distinct for generic input
    report.residual_commute = commute_residual(params, {k1, k2, k3, k4}, sys4);

    report.pass = report.residual_ybe1 <= tol && report.residual_inverse <= tol &&
                  report.residual_commute <= tol;
    return report;
}

// ---------------------------------------------------------------------------

ScanGrid ScanGrid::default_grid() {
    return ScanGrid{{-0.5, 0.0, 0.5}, {-2.0, -1.0, 1.0, 2.0}, {-1.0, 0.0, 1.0},
                    {-2.0, 0.0, 2.0}};
}

namespace {

// Smallest |denominator| over parameters' Y closed form at the three pairwise
// differences; the scan keeps samples whose distance from every pole is at
// least kPoleGap.
constexpr double kPoleGap = 0.1;
constexpr double kMomentumGap = 0.1;

double pole_distance(const ContactParams& params, Complex k_diff) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            const Complex k12 = 0.5 * k_diff;
            if constexpr (std::is_same_v<T, NonSeparatedParams>) {
                return std::abs(Complex(0, 1) * k12 * (p.a + p.d) + k12 * k12 * p.b - p.c);
            } else {
                if (p.dirichlet()) return 1.0;
                return std::abs(Complex(0, 1) * k_diff - 2.0 * p.h);
            }
        },
        params);
}

bool triple_ok(const ContactParams& params, const std::array<double, 3>& k) {
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (auto [i, j] : pairs) {
        if (std::abs(k[i] - k[j]) < kMomentumGap) return false;
        if (pole_distance(params, Complex(k[i] - k[j], 0)) < kPoleGap) return false;
        if (pole_distance(params, Complex(k[j] - k[i], 0)) < kPoleGap) return false;
    }
    return true;
}

} // namespace

std::array<double, 3> sample_momentum_triple(const ContactParams& params, std::uint64_t seed,
                                             int* resampled) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<double, 3> k{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                                rng.uniform(-5.0, 5.0)};
        if (triple_ok(params, k)) return k;
        if (resampled) ++(*resampled);
    }
    throw PoleError("could not sample momenta away from poles", 0.0);
}

namespace {

struct GridIndex {
    double theta, a, b, c;
};

std::vector<GridIndex> enumerate_grid(const ScanGrid& grid) {
    ScanGrid g = grid;
    std::sort(g.thetas.begin(), g.thetas.end());
    std::sort(g.as.begin(), g.as.end());
    std::sort(g.bs.begin(), g.bs.end());
    std::sort(g.cs.begin(), g.cs.end());
    std::vector<GridIndex> out;
    for (double theta : g.thetas)
        for (double a : g.as)
            for (double b : g.bs)
                for (double c : g.cs) out.push_back({theta, a, b, c});
    return out;
}

// Evaluates one grid point; joint residual over ybe1 and the inverse
// relation, maxed over `triples` deterministic momentum samples.
ScanPoint scan_point(const GridIndex& g, std::size_t index, int spin_states,
                     Statistics statistics, int triples, double tol_pass, std::uint64_t seed,
                     int& resampled) {
    ScanPoint pt;
    pt.theta = g.theta;
    pt.a = g.a;
    pt.b = g.b;
    pt.c = g.c;
    if (g.a != 0.0) {
        pt.d = (1.0 + g.b * g.c) / g.a;
    } else {
        if (std::abs(g.b * g.c + 1.0) > 1e-12)
            throw std::invalid_argument("grid point with a = 0 requires bc = -1");
        pt.d = 0.0;
    }
    const NonSeparatedParams params =
        validate_nonseparated(NonSeparatedParams{g.theta, g.a, g.b, g.c, pt.d});
    const ContactParams cp = params;
    const SpinSystem sys(3, spin_states, statistics);

    double worst = 0.0;
    for (int t = 0; t < triples; ++t) {
        const auto k = sample_momentum_triple(cp, mix_seed(seed, index, t), &resampled);
        worst = std::max(worst, ybe_residual(cp, k[0], k[1], k[2], sys));
        worst = std::max(worst, inverse_residual(cp, k[0], k[1], sys));
        worst = std::max(worst, inverse_residual(cp, k[1], k[2], sys));
    }
    pt.max_residual = worst;
    pt.pass = worst <= tol_pass;
    pt.predicted_pass =
        g.theta == 0.0 && g.b == 0.0 && std::abs(pt.a - pt.d) <= 1e-12;
    return pt;
}

ScanResult finish_scan(std::vector<ScanPoint> points, int resampled, double tol_pass) {
    ScanResult result;
    result.points = std::move(points);
    result.resampled = resampled;
    result.tol_pass = tol_pass;
    result.matches_classification = true;
    for (const auto& pt : result.points)
        if (pt.pass != pt.predicted_pass) result.matches_classification = false;
    return result;
}

} // namespace

ScanResult classification_scan_serial(const ScanGrid& grid, int spin_states,
                                      Statistics statistics, int triples, double tol_pass,
                                      std::uint64_t seed) {
    const auto cells = enumerate_grid(grid);
    std::vector<ScanPoint> points(cells.size());
    int resampled = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        points[i] = scan_point(cells[i], i, spin_states, statistics, triples, tol_pass, seed,
                               resampled);
    return finish_scan(std::move(points), resampled, tol_pass);
}

ScanResult classification_scan(const ScanGrid& grid, int spin_states, Statistics statistics,
                               int triples, double tol_pass, std::uint64_t seed) {
    const auto cells = enumerate_grid(grid);
    std::vector<ScanPoint> points(cells.size());
    int resampled = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : resampled)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
        int local = 0;
        points[i] = scan_point(cells[i], static_cast<std::size_t>(i), spin_states, statistics,
                               triples, tol_pass, seed, local);
        resampled += local;
    }
    return finish_scan(std::move(points), resampled, tol_pass);
}

std::vector<SeparatedScanPoint> separated_scan(const std::vector<double>& hs, int spin_states,
                                               Statistics statistics, int triples,
                                               double tol_pass, std::uint64_t seed) {
    std::vector<double> sorted = hs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SeparatedScanPoint> out(sorted.size());
    const SpinSystem sys(3, spin_states, statistics);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(sorted.size()); ++i) {
        const ContactParams cp = SeparatedParams{sorted[i]};
        double worst = 0.0;
        for (int t = 0; t < triples; ++t) {
            const auto k = sample_momentum_triple(cp, mix_seed(seed, i, t));
            worst = std::max(worst, ybe_residual(cp, k[0], k[1], k[2], sys));
            worst = std::max(worst, inverse_residual(cp, k[0], k[1], sys));
        }
        out[i] = {sorted[i], worst, worst <= tol_pass};
    }
    return out;
}

} // namespace pointint
