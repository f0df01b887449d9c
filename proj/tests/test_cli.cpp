#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rspin/json_io.hpp"
#include "rspin/potential.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef RSPIN_CLI_PATH
#error "RSPIN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RSPIN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("potential golden text and latex") {
    RunResult text = run_cli("potential --r 4");
    CHECK(text.exit_code == 0);
    CHECK(text.output == "x^4 + t2*x^2 + t1*x + t0 + 1/8*t2^2\n");

    RunResult latex = run_cli("potential --r 4 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.output == "x^{4} + t_{2}x^{2} + t_{1}x + t_{0} + \\tfrac{1}{8}t_{2}^{2}\n");

    RunResult five = run_cli("potential --r 5");
    CHECK(five.output == "x^5 + t3*x^3 + t2*x^2 + t1*x + t0 + 1/5*t3^2*x + 1/5*t2*t3\n");
}

TEST_CASE("potential json round trips") {
    RunResult res = run_cli("potential --r 6 --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("r") == 6);
    rspin::Poly back = rspin::poly_from_json(j.at("potential"));
    CHECK(back == rspin::build_deformed_potential(6).poly);
}

TEST_CASE("invariants json schema") {
    RunResult res = run_cli("invariants --r 2 --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("r") == 2);
    auto items = j.at("items");
    REQUIRE(items.size() == 2);
    CHECK(items[0].at("twists") == nlohmann::json::array());
    CHECK(items[0].at("k") == 2);
    CHECK(items[0].at("value") == "-2");
    CHECK(items[1].at("twists") == nlohmann::json::array({0}));
    CHECK(items[1].at("k") == 0);
    CHECK(items[1].at("value") == "1");
}

TEST_CASE("verify passes and reports") {
    RunResult res = run_cli("verify --r 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("primitive: yes") != std::string::npos);
    CHECK(res.output.find("flat: yes") != std::string::npos);
    CHECK(res.output.find("oracle potential match: yes") != std::string::npos);
    CHECK(res.output.find("PASS") != std::string::npos);

    RunResult json_res = run_cli("verify --r 4 --degree-cap 6 --format json");
    CHECK(json_res.exit_code == 0);
    auto j = nlohmann::json::parse(json_res.output);
    CHECK(j.at("pass") == true);
    CHECK(j.at("flat_check").at("degree_cap") == 6);
    CHECK(j.at("lambda").at("recursion_holds") == true);
}

TEST_CASE("lambda scan") {
    RunResult res = run_cli("lambda --r 9 --max-l 4 --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("numeric_all_zero") == true);
    CHECK(j.at("symbolic_all_zero") == true);
    CHECK(j.at("pass") == true);
    CHECK(j.at("numeric_checked").get<int>() > 0);
}

TEST_CASE("cycles check") {
    RunResult res = run_cli("cycles --r 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("PASS") != std::string::npos);

    RunResult rot = run_cli("cycles --r 3 --hbar 0.5,0.8660254037844386 --format json");
    CHECK(rot.exit_code == 0);
    auto j = nlohmann::json::parse(rot.output);
    CHECK(j.at("pass") == true);
}

TEST_CASE("deterministic output") {
    for (const char* args : {"potential --r 7", "invariants --r 8 --format json",
                             "verify --r 4 --format json", "cycles --r 3"}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("potential").exit_code == 2);          // missing --r
    CHECK(run_cli("potential --r 1").exit_code == 2);    // r < 2
    CHECK(run_cli("nonsense --r 4").exit_code == 2);     // unknown subcommand
    CHECK(run_cli("potential --r 4 --format yaml").exit_code == 2);
    CHECK(run_cli("invariants --r 4 --format latex").exit_code == 2);
    CHECK(run_cli("cycles --r 4 --hbar 0,0").exit_code == 2);
    CHECK(run_cli("cycles --r 4 --hbar banana").exit_code == 2);
    CHECK(run_cli("verify --r 4 --degree-cap 0").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                   // subcommand required
}

TEST_CASE("help exits clean") {
    RunResult res = run_cli("--help");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("potential") != std::string::npos);
}

}
