#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "pointint/bethe.hpp"
#include "pointint/rng.hpp"

using namespace pointint;
using namespace std::complex_literals;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double vec_max(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

int inversions(std::span<const int> arr) {
    int count = 0;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (arr[i] > arr[j]) ++count;
    return count;
}

std::vector<int> apply_word(int n, const std::vector<int>& word) {
    std::vector<int> arr(n);
    std::iota(arr.begin(), arr.end(), 0);
    for (int pos : word) std::swap(arr[pos], arr[pos + 1]);
    return arr;
}

Vector random_vector(Rng& rng, Eigen::Index dim) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return v;
}

} // namespace

TEST_SUITE("bethe") {

TEST_CASE("bubble words are reduced and reach their arrangement") {
    Rng rng(40);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform_int(2, 6);
        std::vector<int> target(n);
        std::iota(target.begin(), target.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(target[i], target[rng.uniform_int(0, i)]);

        const auto forward = bubble_word(target);
        const auto backward = reverse_bubble_word(target);
        CHECK(static_cast<int>(forward.size()) == inversions(target));
        CHECK(static_cast<int>(backward.size()) == inversions(target));
        CHECK(apply_word(n, forward) == target);
        CHECK(apply_word(n, backward) == target);
    }
    // The two scan directions give genuinely different reduced words.
    const std::vector<int> reversal{2, 1, 0};
    CHECK(bubble_word(reversal) != reverse_bubble_word(reversal));
}

TEST_CASE("two-particle table holds the identity entry and Y times it") {
    SpinSystem sys(2, 2, Statistics::Boson);
    Rng rng(3);
    const Vector init = random_vector(rng, sys.dimension());
    const std::vector<Complex> k{0.4, 1.9};
    const IntegrableFamily fam{Delta{1.1}};
    const CoefficientTable table(fam, k, sys, init);
    REQUIRE(table.size() == 2);
    CHECK(vec_max(table.entry(std::array{0, 1}) - init) == 0.0);
    const Vector expected = y_family(fam, k[0] - k[1], sys, 1).matrix * init;
    CHECK(vec_max(table.entry(std::array{1, 0}) - expected) == 0.0);
}

TEST_CASE("free delta table reduces to statistics swap chains") {
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
        SpinSystem sys(3, 2, stats);
        Rng rng(4);
        const Vector init = random_vector(rng, sys.dimension());
        const CoefficientTable table(IntegrableFamily{Delta{0.0}}, {0.3, 1.2, 2.8}, sys, init);
        const Matrix p12 = statistics_operator(sys, 1, 2);
        const Matrix p23 = statistics_operator(sys, 2, 3);
        CHECK(vec_max(table.entry(std::array{1, 0, 2}) - p12 * init) < 1e-15);
        CHECK(vec_max(table.entry(std::array{0, 2, 1}) - p23 * init) < 1e-15);
        CHECK(vec_max(table.entry(std::array{2, 1, 0}) - p12 * p23 * p12 * init) < 1e-14);
    }
}

TEST_CASE("separated three-particle words agree pairwise") {
    SpinSystem sys(3, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    const std::vector<Complex> k{0.7, 1.9, 3.2};
    CHECK(path_independence_residual(IntegrableFamily{Separated{-1.0}}, k, sys, init) <
          1e-12);
}

TEST_CASE("path independence for N = 4, n = 2, all families") {
    SpinSystem sys(4, 2, Statistics::Boson);
    Rng rng(11);
    const Vector init = random_vector(rng, sys.dimension());
    const std::vector<Complex> k{0.3, 1.1, 2.2, 3.7};
    for (const IntegrableFamily fam :
         {IntegrableFamily{Delta{1.3}}, IntegrableFamily{AntiDelta{-0.8}},
          IntegrableFamily{Separated{0.9}}, IntegrableFamily{Separated{kInf}}}) {
        CHECK(path_independence_residual(fam, k, sys, init) < 1e-12);
    }
}

TEST_CASE("table rejects degenerate momenta and oversized systems") {
    SpinSystem sys(2, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    CHECK_THROWS_AS(CoefficientTable(IntegrableFamily{Delta{1.0}}, {1.0, 1.0}, sys, init),
                    std::invalid_argument);
    SpinSystem big(7, 1, Statistics::Boson);
    Vector init7(1);
    init7 << 1.0;
    CHECK_THROWS_AS(CoefficientTable(IntegrableFamily{Delta{1.0}},
                                     {0., 1., 2., 3., 4., 5., 6.}, big, init7),
                    std::invalid_argument);
}

TEST_CASE("evaluation in the fundamental region matches the two-term sum") {
    SpinSystem sys(2, 2, Statistics::Boson);
    Rng rng(6);
    const Vector init = random_vector(rng, sys.dimension());
    const std::vector<Complex> k{0.9, 2.3};
    const IntegrableFamily fam{Delta{0.7}};
    const WaveFunction wf = make_wavefunction(fam, k, sys, init);

    const Vector alpha12 = init;
    const Vector alpha21 = y_family(fam, k[0] - k[1], sys, 1).matrix * init;
    const double x1 = 0.5, x2 = 1.5;
    const Vector expected = std::exp(1i * (k[0] * x1 + k[1] * x2)) * alpha12 +
                            std::exp(1i * (k[1] * x1 + k[0] * x2)) * alpha21;
    CHECK(vec_max(evaluate(wf, std::array{x1, x2}) - expected) < 1e-14);
}

TEST_CASE("evaluation at a swapped point applies the statistics operator") {
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
        SpinSystem sys(2, 2, stats);
        Rng rng(7);
        const Vector init = random_vector(rng, sys.dimension());
        const WaveFunction wf =
            make_wavefunction(IntegrableFamily{Delta{1.4}}, {0.9, 2.3}, sys, init);
        const Vector inside = evaluate(wf, std::array{0.5, 1.5});
        const Vector outside = evaluate(wf, std::array{1.5, 0.5});
        CHECK(vec_max(outside - statistics_operator(sys, 1, 2) * inside) < 1e-14);
    }
}

TEST_CASE("coincident coordinates are a hyperplane error") {
    SpinSystem sys(2, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    const WaveFunction wf =
        make_wavefunction(IntegrableFamily{Delta{1.0}}, {0.9, 2.3}, sys, init);
    CHECK_THROWS_AS(evaluate(wf, std::array{1.0, 1.0}), std::domain_error);
}

TEST_CASE("fermion one-sided limits are opposite and vanish at the wall") {
    SpinSystem sys(2, 1, Statistics::Fermion);
    Vector init(1);
    init << 1.0;
    const WaveFunction wf =
        make_wavefunction(IntegrableFamily{Delta{2.0}}, {0.9, 2.3}, sys, init);
    const auto data = one_sided_data(wf, 1, std::array{0.7, 0.7});
    CHECK(vec_max(data.value_plus + data.value_minus) < 1e-14);
}

TEST_CASE("one-sided data reproduces the hand-computed two-body limits") {
    SpinSystem sys(2, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    const double c = 1.3;
    const std::vector<Complex> k{0.8, 2.1};
    const WaveFunction wf = make_wavefunction(IntegrableFamily{Delta{c}}, k, sys, init);

    const Complex alpha21 = (1i * (k[0] - k[1]) + c) / (1i * (k[0] - k[1]) - c);
    const double t = 0.4;
    const Complex com = std::exp(1i * (k[0] + k[1]) * t);
    const Complex k12 = 0.5 * (k[0] - k[1]);

    const auto data = one_sided_data(wf, 1, std::array{t, t});
    CHECK(std::abs(data.value_plus(0) - com * (1.0 + alpha21)) < 1e-14);
    CHECK(std::abs(data.value_minus(0) - com * (1.0 + alpha21)) < 1e-14);
    CHECK(std::abs(data.deriv_plus(0) - com * 1i * k12 * (alpha21 - 1.0)) < 1e-14);
    CHECK(std::abs(data.deriv_minus(0) - com * 1i * k12 * (1.0 - alpha21)) < 1e-14);
    // The jump equals c times the value.
    CHECK(std::abs(data.deriv_plus(0) - data.deriv_minus(0) - c * data.value_minus(0)) <
          1e-14);
}

TEST_CASE("one-sided data validates its base point") {
    SpinSystem sys(3, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    const WaveFunction wf =
        make_wavefunction(IntegrableFamily{Delta{1.0}}, {0.5, 1.5, 2.5}, sys, init);
    CHECK_THROWS_AS(one_sided_data(wf, 1, std::array{0.1, 0.3, 1.0}), std::domain_error);
    CHECK_THROWS_AS(one_sided_data(wf, 1, std::array{0.1, 0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(one_sided_data(wf, 3, std::array{0.1, 0.1, 1.0}), std::domain_error);
}

TEST_CASE("each term solves the free equation: finite-difference Laplacian") {
    SpinSystem sys(3, 1, Statistics::Boson);
    Vector init(1);
    init << 1.0;
    const std::vector<Complex> k{0.6, 1.4, 2.7};
    const WaveFunction wf = make_wavefunction(IntegrableFamily{Delta{1.2}}, k, sys, init);
    const std::array<double, 3> x{0.2, 0.9, 1.8};
    const double step = 1e-4;

    Complex laplacian = 0.0;
    for (int m = 0; m < 3; ++m) {
        std::array<double, 3> up = x, down = x;
        up[m] += step;
        down[m] -= step;
        laplacian += (evaluate(wf, up)(0) - 2.0 * evaluate(wf, x)(0) + evaluate(wf, down)(0)) /
                     (step * step);
    }
    const Complex energy = wf.energy();
    CHECK(std::abs(-laplacian - energy * evaluate(wf, x)(0)) < 1e-5);
    CHECK(std::abs(energy - (k[0] * k[0] + k[1] * k[1] + k[2] * k[2])) < 1e-15);
}

TEST_CASE("boundary conditions hold for all three families") {
    const std::vector<Complex> k{0.5, 1.7, 2.9};
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
        SpinSystem sys(3, 2, stats);
        for (const IntegrableFamily fam :
             {IntegrableFamily{Delta{1.3}}, IntegrableFamily{AntiDelta{-0.8}},
              IntegrableFamily{Separated{0.9}}}) {
            // Full basis loop over initial conditions.
            for (Eigen::Index basis = 0; basis < sys.dimension(); ++basis) {
                Vector init = Vector::Zero(sys.dimension());
                init(basis) = 1.0;
                const WaveFunction wf = make_wavefunction(fam, k, sys, init);
                const BoundaryReport report = check_boundary_conditions(wf, 10, 1e-9, 99);
                CHECK(report.pass);
            }
        }
    }
}

TEST_CASE("Dirichlet wavefunction vanishes at the walls") {
    SpinSystem sys(2, 2, Statistics::Boson);
    Rng rng(12);
    const Vector init = random_vector(rng, sys.dimension());
    const WaveFunction wf =
        make_wavefunction(IntegrableFamily{Separated{kInf}}, {0.9, 2.3}, sys, init);
    const auto data = one_sided_data(wf, 1, std::array{0.25, 0.25});
    CHECK(vec_max(data.value_plus) < 1e-14);
    CHECK(vec_max(data.value_minus) < 1e-14);
    CHECK(check_boundary_conditions(wf, 20, 1e-9, 5).pass);
}

TEST_CASE("boundary sampling is deterministic across serial and parallel runs") {
    SpinSystem sys(3, 2, Statistics::Boson);
    Rng rng(13);
    const Vector init = random_vector(rng, sys.dimension());
    const WaveFunction wf =
        make_wavefunction(IntegrableFamily{Delta{0.9}}, {0.5, 1.7, 2.9}, sys, init);
    const BoundaryReport serial = check_boundary_conditions(wf, 25, 1e-9, 21, false);
    const BoundaryReport parallel = check_boundary_conditions(wf, 25, 1e-9, 21, true);
    CHECK(serial.max_residual == parallel.max_residual);
    CHECK(serial.samples == parallel.samples);
}

TEST_CASE("statistics extension property") {
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
        SpinSystem sys(3, 2, stats);
        Rng rng(14);
        const Vector init = random_vector(rng, sys.dimension());
        const WaveFunction wf =
            make_wavefunction(IntegrableFamily{AntiDelta{0.6}}, {0.5, 1.7, 2.9}, sys, init);
        CHECK(statistics_residual(wf, 20, 31) < 1e-12);
    }
}

TEST_CASE("kink gauge transform maps delta bosons to anti-delta fermions") {
    // N = 2, n = 1: the transformed function obeys the anti-delta conditions
    // with strength -c.
    SpinSystem sys2(2, 1, Statistics::Boson);
    Vector one(1);
    one << 1.0;
    const WaveFunction wf2 =
        make_wavefunction(IntegrableFamily{Delta{2.0}}, {0.8, 2.1}, sys2, one);
    const KinkGaugeReport r2 = kink_gauge_check(wf2, 30, 1e-9, 17);
    CHECK(r2.pass);
    CHECK(r2.dual_strength == -2.0);

    // c = 0: the image is the free fermion wavefunction.
    const WaveFunction free2 =
        make_wavefunction(IntegrableFamily{Delta{0.0}}, {0.8, 2.1}, sys2, one);
    CHECK(kink_gauge_check(free2, 10, 1e-9, 18).pass);

    SpinSystem sys3(3, 2, Statistics::Boson);
    Rng rng(15);
    const Vector init = random_vector(rng, sys3.dimension());
    const WaveFunction wf3 =
        make_wavefunction(IntegrableFamily{Delta{1.0}}, {0.4, 1.2, 2.1}, sys3, init);
    const KinkGaugeReport r3 = kink_gauge_check(wf3, 20, 1e-9, 19);
    CHECK(r3.pass);

    CHECK_THROWS_AS(kink_gauge_check(make_wavefunction(IntegrableFamily{Separated{1.0}},
                                                       {0.8, 2.1}, sys2, one),
                                     5, 1e-9, 1),
                    std::invalid_argument);
}

TEST_CASE("coefficient tables coincide under the Y-level duality") {
    const std::vector<Complex> k{0.4, 1.2, 2.1};
    SpinSystem boson(3, 2, Statistics::Boson);
    SpinSystem fermion(3, 2, Statistics::Fermion);
    Rng rng(16);
    const Vector init = random_vector(rng, boson.dimension());
    const CoefficientTable delta_table(IntegrableFamily{Delta{1.0}}, k, boson, init);
    const CoefficientTable anti_table(IntegrableFamily{AntiDelta{-1.0}}, k, fermion, init);
    for (std::size_t i = 0; i < delta_table.size(); ++i)
        CHECK(vec_max(delta_table.coefficient(i) - anti_table.coefficient(i)) <= 1e-15);
}

} // TEST_SUITE
