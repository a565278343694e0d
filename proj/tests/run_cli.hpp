#ifndef POINTINT_TESTS_RUN_CLI_HPP
#define POINTINT_TESTS_RUN_CLI_HPP

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace clitest {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the built CLI with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(POINTINT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to launch " + command);
    CliResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string golden_path(const std::string& name) {
    return std::string(POINTINT_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// The golden command list shared by the unit suite and the acceptance gate.
struct GoldenCase {
    const char* name;    // golden file name
    const char* args;    // CLI arguments
    int exit_code;       // documented exit code
};

inline const std::array<GoldenCase, 11>& golden_cases() {
    static const std::array<GoldenCase, 11> cases{{
        {"ybe_check_delta.json", "ybe-check --family delta --c 1.7 --n 2 --k 0.3,1.1,2.9", 0},
        {"ybe_check_general_b.json",
         "ybe-check --general --theta 0 --a 1 --b 0.5 --c 0 --n 2 --k 0.3,1.1,2.9", 1},
        {"ybe_check_dirichlet.json", "ybe-check --family separated --h inf --n 1 --k 1,2,3",
         0},
        {"ybe_scan_default.csv", "ybe-scan --format csv --seed 0", 0},
        {"ybe_scan_separated.json",
         "ybe-scan --separated --h-grid -3,-1.5,0,1.5,3 --format json --seed 1", 0},
        {"smatrix_two_boson.json",
         "smatrix --family delta --c 1 --N 2 --n 1 --stats boson --k 1,2", 0},
        {"smatrix_separated.json",
         "smatrix --family separated --h -0.7 --N 3 --n 2 --stats fermion --k 0.2,1.1,2.4",
         0},
        {"smatrix_cluster.json", "smatrix --clusters 2,3 --h -1 --q -0.4,0.6 --n 1 --stats boson",
         0},
        {"bound_three.json", "bound --N 3 --h -1 --n 2 --trials 10 --seed 3", 0},
        {"wavefn_delta.json",
         "wavefn-check --family delta --c 1.3 --N 3 --n 2 --stats boson --k 0.4,1.1,2.2 "
         "--trials 15 --seed 5 --eval 0.1,0.7,1.9",
         0},
        {"duality.json", "duality-check --N 3 --n 2 --c 1 --trials 10 --seed 2", 0},
    }};
    return cases;
}

} // namespace clitest

#endif
