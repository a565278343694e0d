#ifndef POINTINT_SPECTRA_HPP
#define POINTINT_SPECTRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pointint/bethe.hpp"
#include "pointint/spinspace.hpp"

namespace pointint {

// Momenta ladder of the separated-family bound state,
//   k_j = i h (N + 1 - 2 j), j = 1..N (purely imaginary, k_N = -k_1).
std::vector<Complex> bound_momenta(int particles, double h);

// E = -h^2 N (N^2 - 1) / 3, equal to sum k_j^2 of the ladder.
double bound_energy(int particles, double h);

// Sign assignment per particle pair (k, l), k > l; 2^{N(N-1)/2} patterns.
class EpsilonPattern {
public:
    EpsilonPattern(int particles, std::vector<int> signs);
    static EpsilonPattern from_index(int particles, std::uint64_t index);
    static int pair_count(int particles) { return particles * (particles - 1) / 2; }
    static std::uint64_t pattern_count(int particles);

    int particles() const { return particles_; }
    // epsilon_{kl} for any k != l (symmetric), sites 1-based.
    int sign(int k, int l) const;
    const std::vector<int>& signs() const { return signs_; }
    std::string to_string() const; // e.g. "+-+" in pair order (2,1),(3,1),(3,2),...

private:
    int particles_;
    std::vector<int> signs_;
};

// Orthonormal basis of {v : P^{kl} v = eps_{kl} v for all pairs}, from the
// nullspace of the stacked (P^{kl} - eps_{kl} I); may be empty. Simultaneous
// eigenvectors of all pair swaps only exist for constant sign patterns, so
// mixed patterns come back empty; dimensions are reported, never assumed.
std::vector<Vector> spin_eigenspace(const SpinSystem& system, const EpsilonPattern& pattern);

// psi(x) = v * prod_{k>l} (theta(x_k - x_l) + eps_{kl} theta(x_l - x_k))
//            * exp(h sum_{i>j} |x_i - x_j|),   h < 0.
struct BoundState {
    SpinSystem system;
    double h;
    std::vector<Complex> momenta;
    double energy;
    EpsilonPattern pattern;
    Vector spin;
};

// Validates h < 0 and that spin lies in the pattern's eigenspace.
BoundState bound_wavefunction(const SpinSystem& system, double h,
                              const EpsilonPattern& pattern, const Vector& spin);

// Pointwise value away from all hyperplanes.
Vector bound_evaluate(const BoundState& state, std::span<const double> x);

// One-sided data at the pair hyperplane x_i = x_j (any pair, i < j), with
// the relative derivative (d_{x_j} - d_{x_i})/2 evaluated honestly from the
// sign sums of the exponent.
OneSidedData bound_one_sided(const BoundState& state, int site_i, int site_j,
                             std::span<const double> base);

struct BoundVerification {
    double max_boundary_residual = 0.0; // separated conditions, every pair
    double max_energy_residual = 0.0;   // -sum d^2 psi vs E psi, open regions
    double max_exponent_residual = 0.0; // region exponents vs Bethe momenta
    bool decay_ok = false;              // |psi| decays along random rays
    double tol = 1e-10;
    bool pass = false;
};

// (i) separated boundary conditions at sampled hyperplane points for every
// pair, (ii) analytic -sum d^2 = E in open regions, (iii) region exponents
// match the momenta ladder, (iv) decay along random directions in the
// center-of-mass hyperplane.
BoundVerification verify_bound_state(const BoundState& state, int trials, double tol,
                                     std::uint64_t seed, bool parallel = true);

} // namespace pointint

#endif
