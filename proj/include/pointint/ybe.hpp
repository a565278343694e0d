#ifndef POINTINT_YBE_HPP
#define POINTINT_YBE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pointint/contact_params.hpp"
#include "pointint/spinspace.hpp"

namespace pointint {

// Residuals of the Yang-Baxter equation and of the auxiliary relations:
//   ybe1:    Y^{12}(k1-k2) Y^{23}(k3-k2) Y^{12}(k3-k1)
//          = Y^{23}(k3-k1) Y^{12}(k3-k2) Y^{23}(k1-k2)
//   inverse: Y(ki-kj) Y(kj-ki) = 1
//   commute: [Y^{12}, Y^{34}] = 0 on disjoint pairs (needs N >= 4)
// verdict holds iff every computed residual is <= tol.
struct YbeReport {
    std::array<Complex, 3> momenta{};
    double residual_ybe1 = 0.0;
    double residual_inverse = 0.0;
    double residual_commute = 0.0;
    double tol = 1e-10;
    bool pass = false;
};

// Max-norm residual of the Yang-Baxter equation on a three-particle system.
double ybe_residual(const ContactParams& params, Complex k1, Complex k2, Complex k3,
                    const SpinSystem& system);
double ybe_residual(const IntegrableFamily& family, Complex k1, Complex k2, Complex k3,
                    const SpinSystem& system);

// ||Y(ki-kj) Y(kj-ki) - I||_max on sites (1,2).
double inverse_residual(const ContactParams& params, Complex k_i, Complex k_j,
                        const SpinSystem& system);

// ||[Y^{12}(k1-k2), Y^{34}(k3-k4)]||_max; system must have N >= 4.
double commute_residual(const ContactParams& params, const std::array<Complex, 4>& momenta,
                        const SpinSystem& system);

// Assembles all three residuals (ybe1 on N=3, inverse on (k1,k2), commute on
// an internally built N=4 system with the same n and statistics).
YbeReport full_ybe_report(const ContactParams& params, Complex k1, Complex k2, Complex k3,
                          int spin_states, Statistics statistics, double tol);

// ---------------------------------------------------------------------------
// Parameter-space scan over the nonseparated family.

struct ScanGrid {
    std::vector<double> thetas;
    std::vector<double> as;
    std::vector<double> bs;
    std::vector<double> cs;

    static ScanGrid default_grid();
};

struct ScanPoint {
    double theta = 0.0, a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    // Max over momentum samples of max(ybe1, inverse residual).
    double max_residual = 0.0;
    bool pass = false;
    // Points the classification predicts to pass: theta = 0, a = d, b = 0.
    bool predicted_pass = false;
};

struct ScanResult {
    std::vector<ScanPoint> points; // sorted by (theta, a, b, c)
    int resampled = 0;             // momentum samples rejected near poles
    double tol_pass = 1e-10;
    bool matches_classification = false;
};

// Evaluates the grid with d fixed by ad - bc = 1 (d = (1+bc)/a for a != 0;
// a = 0 points require bc = -1 and take d = 0). Each grid point draws
// `triples` momentum triples from [-5,5]^3 with pairwise separation >= 0.1,
// resampling draws that come within 0.1 of a Y pole. Deterministic for a
// fixed seed regardless of thread count.
ScanResult classification_scan(const ScanGrid& grid, int spin_states, Statistics statistics,
                               int triples, double tol_pass, std::uint64_t seed);

// Plain loop over grid points; reference for the OpenMP version.
ScanResult classification_scan_serial(const ScanGrid& grid, int spin_states,
                                      Statistics statistics, int triples, double tol_pass,
                                      std::uint64_t seed);

// Separated-family scan: every h passes; reported for completeness.
struct SeparatedScanPoint {
    double h = 0.0;
    double max_residual = 0.0;
    bool pass = false;
};
std::vector<SeparatedScanPoint> separated_scan(const std::vector<double>& hs, int spin_states,
                                               Statistics statistics, int triples,
                                               double tol_pass, std::uint64_t seed);

// Momentum triple in [-5,5]^3, pairwise gaps >= 0.1, at least 0.1 away from
// every pole of the given parameters; used by the scan and the CLI.
std::array<double, 3> sample_momentum_triple(const ContactParams& params, std::uint64_t seed,
                                             int* resampled = nullptr);

} // namespace pointint

#endif
