#include <doctest.h>

#include <cmath>

#include "pointint/errors.hpp"
#include "pointint/rng.hpp"
#include "pointint/ybe.hpp"

using namespace pointint;

TEST_SUITE("ybe") {

TEST_CASE("integrable families satisfy the Yang-Baxter equation") {
    SpinSystem sys(3, 2, Statistics::Boson);
    CHECK(ybe_residual(IntegrableFamily{Delta{1.7}}, 0.3, 1.1, 2.9, sys) < 1e-12);
    CHECK(ybe_residual(IntegrableFamily{Separated{-0.6}}, 0.3, 1.1, 2.9, sys) < 1e-12);
    CHECK(ybe_residual(IntegrableFamily{AntiDelta{0.9}}, 0.3, 1.1, 2.9, sys) < 1e-12);

    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        SpinSystem s(3, n, t % 2 == 0 ? Statistics::Boson : Statistics::Fermion);
        const ContactParams params = t % 2 == 0
                                         ? ContactParams{embed(Delta{rng.uniform(-2, 2)})}
                                         : ContactParams{SeparatedParams{rng.uniform(-2, 2)}};
        const auto k = sample_momentum_triple(params, mix_seed(900, t));
        CHECK(ybe_residual(params, k[0], k[1], k[2], s) < 1e-10);
    }
}

TEST_CASE("a nonzero b breaks the Yang-Baxter equation") {
    SpinSystem sys(3, 2, Statistics::Boson);
    const ContactParams p = validate_nonseparated({0.0, 1.0, 0.5, 0.0, 1.0});
    CHECK(ybe_residual(p, 0.3, 1.1, 2.9, sys) > 1e-3);
}

TEST_CASE("random non-integrable points fail for n >= 2") {
    // theta = 0, a = d, b != 0 keeps the two-body relation consistent but
    // breaks the three-body consistency; at least one of five triples must
    // expose a residual above the failure floor.
    Rng rng(555);
    SpinSystem sys(3, 2, Statistics::Boson);
    for (int t = 0; t < 25; ++t) {
        double b = rng.uniform(0.3, 2.0) * (t % 2 == 0 ? 1.0 : -1.0);
        double c = rng.uniform(-2.0, 2.0);
        if (1.0 + b * c <= 0.04) {
            c = 0.0;
        }
        const double a = std::sqrt(1.0 + b * c);
        const ContactParams p = validate_nonseparated({0.0, a, b, c, a});
        double worst = 0.0;
        for (int triple = 0; triple < 5; ++triple) {
            const auto k = sample_momentum_triple(p, mix_seed(4242, t, triple));
            worst = std::max(worst, ybe_residual(p, k[0], k[1], k[2], sys));
        }
        CHECK(worst > 1e-6);
    }
}

TEST_CASE("inverse relation on the exchange-symmetric manifold") {
    Rng rng(2);
    SpinSystem sys(3, 2, Statistics::Boson);
    for (int t = 0; t < 40; ++t) {
        const double ki = rng.uniform(-5.0, 5.0);
        const double kj = ki + rng.uniform(0.3, 4.0);
        switch (t % 3) {
        case 0:
            CHECK(inverse_residual(ContactParams{embed(Delta{rng.uniform(-2, 2)})}, ki, kj,
                                   sys) < 1e-12);
            break;
        case 1:
            CHECK(inverse_residual(ContactParams{SeparatedParams{rng.uniform(-2, 2)}}, ki,
                                   kj, sys) < 1e-12);
            break;
        default: {
            const double b = rng.uniform(-1.5, 1.5);
            const double c = rng.uniform(-1.5, 1.5);
            if (1.0 + b * c <= 0.04) break;
            const double a = std::sqrt(1.0 + b * c);
            CHECK(inverse_residual(validate_nonseparated({0.0, a, b, c, a}), ki, kj, sys) <
                  1e-12);
        }
        }
    }
}

TEST_CASE("coincident momenta are rejected") {
    SpinSystem sys(3, 2, Statistics::Boson);
    CHECK_THROWS_AS(inverse_residual(ContactParams{embed(Delta{1.0})}, 1.0, 1.0, sys),
                    std::invalid_argument);
}

TEST_CASE("disjoint pairs commute") {
    SpinSystem sys(4, 2, Statistics::Boson);
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const std::array<Complex, 4> k{rng.uniform(-4, 4), rng.uniform(-4, 4),
                                       rng.uniform(-4, 4), rng.uniform(-4, 4)};
        if (std::abs(k[0] - k[1]) < 0.1 || std::abs(k[2] - k[3]) < 0.1) continue;
        CHECK(commute_residual(ContactParams{embed(Delta{1.0})}, k, sys) < 1e-12);
        const NonSeparatedParams general =
            validate_nonseparated({0.3, 1.4, 0.7, -0.4, (1.0 + 0.7 * -0.4) / 1.4});
        CHECK(commute_residual(ContactParams{general}, k, sys) < 1e-12);
    }
    SpinSystem scalar(4, 1, Statistics::Boson);
    CHECK(commute_residual(ContactParams{embed(Delta{1.0})}, {0.1, 0.9, 1.7, 2.5}, scalar) ==
          0.0);
    SpinSystem small(3, 2, Statistics::Boson);
    CHECK_THROWS_AS(commute_residual(ContactParams{embed(Delta{1.0})}, {0.1, 0.9, 1.7, 2.5},
                                     small),
                    std::invalid_argument);
}

TEST_CASE("full report aggregates the three relations") {
    const YbeReport good =
        full_ybe_report(ContactParams{embed(Delta{1.3})}, 0.3, 1.1, 2.9, 2,
                        Statistics::Boson, 1e-10);
    CHECK(good.pass);
    CHECK(good.residual_ybe1 < 1e-10);
    CHECK(good.residual_inverse < 1e-10);
    CHECK(good.residual_commute < 1e-10);

    const YbeReport bad = full_ybe_report(validate_nonseparated({0.0, 1.0, 0.5, 0.0, 1.0}),
                                          0.3, 1.1, 2.9, 2, Statistics::Boson, 1e-10);
    CHECK(!bad.pass);
    CHECK(bad.residual_ybe1 > 1e-6);
    CHECK(bad.residual_inverse < 1e-10); // two-body relation still consistent
}

TEST_CASE("classification scan reproduces the integrable set") {
    const ScanResult result = classification_scan(ScanGrid::default_grid(), 2,
                                                  Statistics::Boson, 3, 1e-10, 0);
    CHECK(result.points.size() == 108);
    CHECK(result.matches_classification);
    int passes = 0;
    for (const auto& pt : result.points) {
        if (pt.pass) {
            ++passes;
            CHECK(pt.theta == 0.0);
            CHECK(pt.b == 0.0);
            CHECK(pt.a == pt.d);
            CHECK(std::abs(std::abs(pt.a) - 1.0) < 1e-12);
            CHECK(pt.max_residual <= 1e-10);
        } else {
            CHECK(pt.max_residual > 1e-6);
        }
    }
    CHECK(passes == 6); // theta=0, b=0, a=d=+-1, c in {-2,0,2}
}

TEST_CASE("scan is deterministic and the serial reference agrees with OpenMP") {
    const ScanResult a = classification_scan(ScanGrid::default_grid(), 2, Statistics::Boson,
                                             3, 1e-10, 7);
    const ScanResult b = classification_scan_serial(ScanGrid::default_grid(), 2,
                                                    Statistics::Boson, 3, 1e-10, 7);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].max_residual == b.points[i].max_residual);
        CHECK(a.points[i].pass == b.points[i].pass);
        CHECK(a.points[i].d == b.points[i].d);
    }
    CHECK(a.resampled == b.resampled);
}

TEST_CASE("single integrable point passes, tilted point fails") {
    ScanGrid delta_only{{0.0}, {1.0}, {0.0}, {3.0}};
    const ScanResult pass = classification_scan(delta_only, 2, Statistics::Boson, 3, 1e-10, 0);
    REQUIRE(pass.points.size() == 1);
    CHECK(pass.points[0].pass);

    ScanGrid tilted{{0.1}, {1.0}, {0.0}, {1.0}};
    const ScanResult fail = classification_scan(tilted, 2, Statistics::Boson, 3, 1e-10, 0);
    REQUIRE(fail.points.size() == 1);
    CHECK(!fail.points[0].pass);
}

TEST_CASE("separated scan passes for every h") {
    const std::vector<double> hs{-3.0, -1.5, -0.25, 0.0, 0.8, 2.2, 3.0};
    for (const auto& pt : separated_scan(hs, 2, Statistics::Boson, 3, 1e-10, 1)) {
        CHECK(pt.pass);
        CHECK(pt.max_residual < 1e-10);
    }
}

} // TEST_SUITE
