#include <doctest.h>

#include "run_cli.hpp"

using clitest::golden_cases;
using clitest::golden_path;
using clitest::read_file;
using clitest::run_cli;

TEST_SUITE("cli") {

TEST_CASE("golden outputs and exit codes") {
    for (const auto& c : golden_cases()) {
        CAPTURE(c.name);
        const auto result = run_cli(c.args);
        CHECK(result.exit_code == c.exit_code);
        CHECK(result.output == read_file(golden_path(c.name)));
    }
}

TEST_CASE("identical seeds give byte-identical output") {
    const auto first = run_cli("ybe-scan --format csv --seed 7");
    const auto second = run_cli("ybe-scan --format csv --seed 7");
    CHECK(first.output == second.output);

    const auto w1 = run_cli(
        "wavefn-check --family separated --h 0.9 --N 3 --n 2 --stats boson --k 0.5,1.7,2.9 "
        "--trials 10 --seed 11");
    const auto w2 = run_cli(
        "wavefn-check --family separated --h 0.9 --N 3 --n 2 --stats boson --k 0.5,1.7,2.9 "
        "--trials 10 --seed 11");
    CHECK(w1.exit_code == 0);
    CHECK(w1.output == w2.output);
}

TEST_CASE("different seeds change sampled reports") {
    const auto a = run_cli("ybe-scan --format csv --seed 1");
    const auto b = run_cli("ybe-scan --format csv --seed 2");
    CHECK(a.output != b.output);
}

TEST_CASE("usage and config errors exit with code 2") {
    CHECK(run_cli("ybe-check --family delta --c 1 --k 1,2").exit_code == 2); // two momenta
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("ybe-check --family nosuch --k 1,2,3").exit_code == 2);
    CHECK(run_cli("ybe-scan --theta-grid ,").exit_code == 2); // empty grid
    CHECK(run_cli("bound --N 3 --h 1").exit_code == 2);       // h > 0 has no bound states
    CHECK(run_cli("ybe-check --general --theta 0 --a 0 --b 1 --c 1 --k 1,2,3").exit_code ==
          2); // cannot derive d
    CHECK(run_cli("smatrix --family delta --c 1 --N 2 --n 1 --k 1,1").exit_code == 2);
}

TEST_CASE("poles exit with code 3") {
    // i(k1 - k2) = c puts the delta Y on its pole.
    CHECK(run_cli("smatrix --family delta --c 1 --N 2 --n 1 --stats boson --k 0,-1i")
              .exit_code == 3);
}

TEST_CASE("help is exit 0") {
    CHECK(run_cli("--help").exit_code == 0);
}

} // TEST_SUITE
