#ifndef POINTINT_SPINSPACE_HPP
#define POINTINT_SPINSPACE_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pointint {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Statistics { Boson, Fermion };

std::string to_string(Statistics s);
Statistics parse_statistics(const std::string& name);

// N particles, each carrying n internal ("spin") states. Spin vectors live
// in the n^N tensor-product space; basis states are ranked big-endian with
// site 1 as the most significant digit.
class SpinSystem {
public:
    SpinSystem(int particles, int spin_states, Statistics statistics);

    int particles() const { return particles_; }
    int spin_states() const { return spin_states_; }
    Statistics statistics() const { return statistics_; }
    Eigen::Index dimension() const { return dimension_; }

    // +1 for bosons, -1 for fermions; the sign in P^{ij} = sign * p^{ij}.
    double statistics_sign() const { return statistics_ == Statistics::Boson ? 1.0 : -1.0; }

private:
    int particles_;
    int spin_states_;
    Statistics statistics_;
    Eigen::Index dimension_;
};

// Mixed-radix rank of a spin multi-index (s_1, ..., s_N), s_i in [0, n).
Eigen::Index basis_index(const SpinSystem& system, std::span<const int> spins);

// Inverse of basis_index.
std::vector<int> basis_spins(const SpinSystem& system, Eigen::Index index);

// p^{ij}: the 0/1 matrix exchanging the spin labels at sites i and j.
// Sites are 1-based, 1 <= i < j <= N.
Matrix permutation_operator(const SpinSystem& system, int site_i, int site_j);

// P^{ij} = p^{ij} for bosons, -p^{ij} for fermions.
Matrix statistics_operator(const SpinSystem& system, int site_i, int site_j);

// R_tau with R_tau e_s = e_{s o tau}, i.e. (R_tau v)[s] = v[s o tau^{-1}],
// where (s o tau)_m = s_{tau(m)}. tau is one-line, 0-based, length N.
// For a transposition this reduces to permutation_operator.
Matrix site_permutation_operator(const SpinSystem& system, std::span<const int> tau);

// Matrix-free application of R_tau.
Vector apply_site_permutation(const SpinSystem& system, std::span<const int> tau,
                              const Vector& v);

// Sign of a permutation in one-line notation (0-based).
int permutation_parity(std::span<const int> perm);

} // namespace pointint

#endif
