#ifndef POINTINT_SCATTERING_HPP
#define POINTINT_SCATTERING_HPP

#include <span>
#include <vector>

#include "pointint/contact_params.hpp"
#include "pointint/spinspace.hpp"

namespace pointint {

// X_{ij} = Y^{ij}_{ij} P^{ij}: the family closed form at spectral parameter
// k_i - k_j acting on the (i, j) tensor factors, composed with the
// statistics swap. i and j are 1-based and may be non-adjacent.
Matrix x_operator(const IntegrableFamily& family, std::span<const Complex> momenta, int i,
                  int j, const SpinSystem& system);

struct SMatrix {
    SpinSystem system;
    std::vector<Complex> momenta;
    IntegrableFamily family;
    Matrix matrix;
};

// S = [X_21 X_31 ... X_N1][X_32 X_42 ... X_N2] ... [X_N(N-1)], accumulated
// left to right in exactly this order. For real increasing momenta and real
// family parameter S is unitary and symmetric.
SMatrix s_matrix(const IntegrableFamily& family, const std::vector<Complex>& momenta,
                 const SpinSystem& system);

// Same operator assembled the other way: the Y-chain S' relating the
// identity arrangement to the reversed one, times the adjacent-swap
// realization of the order reversal [P^{12}][P^{23}P^{12}]...
SMatrix s_matrix_via_sprime(const IntegrableFamily& family,
                            const std::vector<Complex>& momenta, const SpinSystem& system);

// Scattering of two separated-family bound clusters of sizes (size_a,
// size_b) with real cluster momenta (q_a, q_b): particle momenta are the
// bound ladders shifted by the cluster momenta, and
// S = [X_{(Na+1)Na} ... ] ordered with the first-cluster index descending
// across brackets, matching the two-on-three product
// [X_32 X_42 X_52][X_31 X_41 X_51]. The system must have N = size_a + size_b.
Matrix cluster_s_matrix(double h, int size_a, int size_b, double q_a, double q_b,
                        const SpinSystem& system);

// Particle momenta used by cluster_s_matrix.
std::vector<Complex> cluster_momenta(double h, int size_a, int size_b, double q_a, double q_b);

struct SPropertyReport {
    double unitarity_residual = 0.0; // ||S^dagger S - I||_max
    double symmetry_residual = 0.0;  // ||S - S^T||_max
    double tol = 1e-10;
    bool pass = false;
};

SPropertyReport verify_s_properties(const SMatrix& s, double tol);

} // namespace pointint

#endif
