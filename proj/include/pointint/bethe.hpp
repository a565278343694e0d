#ifndef POINTINT_BETHE_HPP
#define POINTINT_BETHE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pointint/contact_params.hpp"
#include "pointint/spinspace.hpp"
#include "pointint/yops.hpp"

namespace pointint {

// Reduced word (adjacent swap positions, 0-based) taking the identity
// arrangement to `arrangement`, generated by recording a bubble sort of the
// arrangement and reversing it. The two variants scan passes left-to-right
// and right-to-left; they generally give distinct reduced words for the same
// permutation, which is what the path-independence check compares.
std::vector<int> bubble_word(std::span<const int> arrangement);
std::vector<int> reverse_bubble_word(std::span<const int> arrangement);

enum class WordOrder { Bubble, ReverseBubble };

// All N! coefficient vectors of the Bethe expansion, keyed by the
// arrangement of momentum labels. Entries are produced from the identity
// entry by Y-chains: swapping the source pair (u, v) at positions (i, i+1)
// applies Y(k_u - k_v) on sites (i, i+1).
class CoefficientTable {
public:
    CoefficientTable(IntegrableFamily family, std::vector<Complex> momenta,
                     const SpinSystem& system, const Vector& initial,
                     WordOrder order = WordOrder::Bubble);

    const SpinSystem& system() const { return system_; }
    const std::vector<Complex>& momenta() const { return momenta_; }
    const IntegrableFamily& family() const { return family_; }
    std::size_t size() const { return arrangements_.size(); }

    const std::vector<std::vector<int>>& arrangements() const { return arrangements_; }
    const Vector& coefficient(std::size_t index) const { return coefficients_[index]; }
    const std::vector<int>& word(std::size_t index) const { return words_[index]; }

    // Lexicographic rank of an arrangement (0-based labels).
    std::size_t rank(std::span<const int> arrangement) const;
    const Vector& entry(std::span<const int> arrangement) const;

private:
    IntegrableFamily family_;
    std::vector<Complex> momenta_;
    SpinSystem system_;
    std::vector<std::vector<int>> arrangements_;
    std::vector<Vector> coefficients_;
    std::vector<std::vector<int>> words_;
};

CoefficientTable build_coefficient_table(const IntegrableFamily& family,
                                         const std::vector<Complex>& momenta,
                                         const SpinSystem& system, const Vector& initial,
                                         WordOrder order = WordOrder::Bubble);

// Max entrywise difference between the two word variants' tables.
double path_independence_residual(const IntegrableFamily& family,
                                  const std::vector<Complex>& momenta,
                                  const SpinSystem& system, const Vector& initial);

// Bethe wavefunction: the N!-term sum in the fundamental region
// x_1 < ... < x_N, extended to the other regions by boson symmetry or
// fermion antisymmetry of (position, spin) pairs.
class WaveFunction {
public:
    explicit WaveFunction(CoefficientTable table) : table_(std::move(table)) {}

    const CoefficientTable& table() const { return table_; }
    const SpinSystem& system() const { return table_.system(); }

    // Total energy sum(k_i^2) of the free equation each term solves.
    Complex energy() const;

private:
    CoefficientTable table_;
};

WaveFunction make_wavefunction(const IntegrableFamily& family,
                               const std::vector<Complex>& momenta, const SpinSystem& system,
                               const Vector& initial, WordOrder order = WordOrder::Bubble);

// Pointwise value at a configuration with no two coordinates equal.
Vector evaluate(const WaveFunction& wavefn, std::span<const double> x);

// One-sided limits at the hyperplane x_i = x_{i+1} (pair is the 1-based i).
// Derivatives are in the relative coordinate of the meeting pair,
// d/dx = (d/dx_{i+1} - d/dx_i)/2.
struct OneSidedData {
    Vector value_plus, value_minus, deriv_plus, deriv_minus;
};
OneSidedData one_sided_data(const WaveFunction& wavefn, int pair,
                            std::span<const double> base);

// Residuals of the family's boundary conditions at the hyperplane, from
// precomputed one-sided data; normalized by the local wavefunction scale.
double boundary_residual(const IntegrableFamily& family, const OneSidedData& data);

struct BoundaryReport {
    double max_residual = 0.0;
    int samples = 0;
    double tol = 1e-9;
    bool pass = false;
};

// Samples random hyperplane base points for every adjacent pair (other
// coordinates keep gaps >= 0.2) and returns the worst boundary residual.
BoundaryReport check_boundary_conditions(const WaveFunction& wavefn, int trials, double tol,
                                         std::uint64_t seed, bool parallel = true);

// Statistics property ||psi(x o tau) - eps(tau) R_tau psi(x)||_max over
// random configurations and permutations, normalized by scale.
double statistics_residual(const WaveFunction& wavefn, int trials, std::uint64_t seed);

// Kink gauge transformation U = prod_{i>j} sgn(x_i - x_j) applied to a
// delta-family boson wavefunction. Checks that U psi satisfies the
// anti-delta boundary conditions with strength -c and is fermion
// antisymmetric; dual_strength records the empirically confirmed sign.
struct KinkGaugeReport {
    double max_boundary_residual = 0.0;
    double max_statistics_residual = 0.0;
    double dual_strength = 0.0;
    double tol = 1e-9;
    bool pass = false;
};
KinkGaugeReport kink_gauge_check(const WaveFunction& wavefn, int trials, double tol,
                                 std::uint64_t seed);

} // namespace pointint

#endif
