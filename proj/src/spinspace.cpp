#include "pointint/spinspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace pointint {

std::string to_string(Statistics s) {
    return s == Statistics::Boson ? "boson" : "fermion";
}

Statistics parse_statistics(const std::string& name) {
    if (name == "boson") return Statistics::Boson;
    if (name == "fermion") return Statistics::Fermion;
    throw std::invalid_argument("unknown statistics '" + name + "' (expected boson|fermion)");
}

SpinSystem::SpinSystem(int particles, int spin_states, Statistics statistics)
    : particles_(particles), spin_states_(spin_states), statistics_(statistics) {
    if (particles < 1) throw std::invalid_argument("particle count must be >= 1");
    if (spin_states < 1) throw std::invalid_argument("spin state count must be >= 1");
    Eigen::Index dim = 1;
    for (int i = 0; i < particles; ++i) {
        if (dim > (1 << 24) / spin_states)
            throw std::invalid_argument("spin space dimension n^N too large");
        dim *= spin_states;
    }
    dimension_ = dim;
}

Eigen::Index basis_index(const SpinSystem& system, std::span<const int> spins) {
    if (static_cast<int>(spins.size()) != system.particles())
        throw std::invalid_argument("spin label count does not match particle count");
    Eigen::Index idx = 0;
    for (int s : spins) {
        if (s < 0 || s >= system.spin_states())
            throw std::domain_error("spin label out of range [0, n)");
        idx = idx * system.spin_states() + s;
    }
    return idx;
}

std::vector<int> basis_spins(const SpinSystem& system, Eigen::Index index) {
    if (index < 0 || index >= system.dimension())
        throw std::domain_error("basis index out of range");
    std::vector<int> spins(system.particles());
    for (int m = system.particles() - 1; m >= 0; --m) {
        spins[m] = static_cast<int>(index % system.spin_states());
        index /= system.spin_states();
    }
    return spins;
}

namespace {

void check_site_pair(const SpinSystem& system, int site_i, int site_j) {
    if (site_i < 1 || site_j < 1 || site_i > system.particles() || site_j > system.particles())
        throw std::domain_error("site index out of range");
    if (site_i == site_j) throw std::domain_error("site indices must differ");
}

} // namespace

Matrix permutation_operator(const SpinSystem& system, int site_i, int site_j) {
    check_site_pair(system, site_i, site_j);
    const Eigen::Index dim = system.dimension();
    Matrix p = Matrix::Zero(dim, dim);
    std::vector<int> spins;
    for (Eigen::Index col = 0; col < dim; ++col) {
        spins = basis_spins(system, col);
        std::swap(spins[site_i - 1], spins[site_j - 1]);
        p(basis_index(system, spins), col) = 1.0;
    }
    return p;
}

Matrix statistics_operator(const SpinSystem& system, int site_i, int site_j) {
    return system.statistics_sign() * permutation_operator(system, site_i, site_j);
}

Matrix site_permutation_operator(const SpinSystem& system, std::span<const int> tau) {
    const Eigen::Index dim = system.dimension();
    Matrix r = Matrix::Zero(dim, dim);
    std::vector<int> image(system.particles());
    for (Eigen::Index col = 0; col < dim; ++col) {
        const std::vector<int> spins = basis_spins(system, col);
        for (int m = 0; m < system.particles(); ++m) image[m] = spins[tau[m]];
        r(basis_index(system, image), col) = 1.0;
    }
    return r;
}

Vector apply_site_permutation(const SpinSystem& system, std::span<const int> tau,
                              const Vector& v) {
    if (static_cast<int>(tau.size()) != system.particles())
        throw std::invalid_argument("permutation length does not match particle count");
    Vector out(system.dimension());
    std::vector<int> image(system.particles());
    for (Eigen::Index col = 0; col < system.dimension(); ++col) {
        const std::vector<int> spins = basis_spins(system, col);
        for (int m = 0; m < system.particles(); ++m) image[m] = spins[tau[m]];
        out(basis_index(system, image)) = v(col);
    }
    return out;
}

int permutation_parity(std::span<const int> perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace pointint
