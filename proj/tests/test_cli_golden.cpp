#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// Golden-file tests: every subcommand is run against committed fixtures and
// must reproduce the committed output byte for byte.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(ASAI_CLI_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string golden_path(const std::string& name) {
    return std::string(ASAI_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void check_golden(const std::string& args, const std::string& golden, int expected_exit = 0) {
    CAPTURE(args);
    RunResult result = run_cli(args);
    CHECK(result.exit_code == expected_exit);
    CHECK(result.output == read_file(golden_path(golden)));
}

} // namespace

TEST_CASE("cli golden: transfer") {
    check_golden("transfer --input " + golden_path("demo_split.json") + " --sign plus",
                 "transfer_split.out");
    check_golden("transfer --input " + golden_path("demo_inert.json") + " --sign minus",
                 "transfer_inert_minus.out");
    check_golden("transfer --input " + golden_path("symbolic_split.json") + " --sign plus",
                 "transfer_symbolic.out");
}

TEST_CASE("cli golden: euler") {
    check_golden("euler --input " + golden_path("euler_profile.json") +
                     " --prime 7 --order 8 --sign plus",
                 "euler_7.out");
    check_golden("euler --input " + golden_path("euler_profile.json") +
                     " --prime 19 --order 6 --sign plus --global-limit 20",
                 "euler_global.out");
    check_golden("euler --input " + golden_path("euler_profile.json") +
                     " --prime 3 --order 6 --sign minus",
                 "euler_minus.out", 1);
}

TEST_CASE("cli golden: slope") {
    check_golden("slope --weight 3,1,0,1 --regime split", "slope_split.out");
    check_golden("slope --weight 9,1,-1,3 --regime inert", "slope_inert.out");
}

TEST_CASE("cli golden: classify") {
    check_golden("classify --input " + golden_path("demo_split.json") + " --unit 1,1,2",
                 "classify_split.out");
    check_golden("classify --input " + golden_path("symbolic_split.json"),
                 "classify_symbolic.out");
}

TEST_CASE("cli golden: refine") {
    check_golden("refine --input " + golden_path("demo_split.json") + " --sign plus",
                 "refine_split.out");
    check_golden("refine --input " + golden_path("demo_inert.json") + " --sign minus",
                 "refine_inert.out");
    check_golden("refine --input " + golden_path("symbolic_split.json") + " --sign plus",
                 "refine_symbolic.out");
}

TEST_CASE("cli golden: qfiber") {
    check_golden("qfiber --a " + golden_path("report_a.json") + " --b " +
                     golden_path("report_b_negated_u2.json"),
                 "qfiber_equivalent.out");
    check_golden("qfiber --a " + golden_path("report_a.json") + " --b " +
                     golden_path("report_c_perturbed.json"),
                 "qfiber_different.out");
}

TEST_CASE("cli golden: verify is deterministic for a fixed seed") {
    std::string args = "verify --seed 42 --trials 5";
    RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == read_file(golden_path("verify_seed42.out")));
    RunResult second = run_cli(args);
    CHECK(second.output == first.output);
}

TEST_CASE("cli diagnostics exit code") {
    RunResult result = run_cli("transfer --input " + golden_path("bad_packet.json") +
                               " --sign plus");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("m mismatch") != std::string::npos);
}
