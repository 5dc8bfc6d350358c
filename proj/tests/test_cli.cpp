#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef GOLDMAN_CLI_PATH
#error "GOLDMAN_CLI_PATH must point at the goldman binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GOLDMAN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("bracket subcommand reproduces the power-bracket sum") {
    RunResult r = run_cli("bracket --x aB --y aB --m 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "-2");
    CHECK(j["terms"][0]["word"] == "aaBaBB");
    CHECK(j["terms"][1]["coeff"] == "2");
    CHECK(j["terms"][1]["word"] == "aaBBaB");
    CHECK(j["converged"] == true);
    CHECK(j["radius"] == 8);
}

TEST_CASE("bracket of disjoint classes is the zero sum") {
    RunResult r = run_cli("bracket --x a --y b");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["terms"].empty());
    CHECK(j["points"].empty());
}

TEST_CASE("parse errors exit 2 with a diagnostic") {
    CHECK(run_cli("bracket --x a! --y b").exit_code == 2);
    CHECK(run_cli("bracket --x aB --y aab --radius 99").exit_code == 2);
    CHECK(run_cli("separable --x aB").exit_code == 2);  // missing required option
}

TEST_CASE("separable subcommand") {
    RunResult disjoint = run_cli("separable --x aB --y ab");
    REQUIRE(disjoint.exit_code == 0);
    auto j1 = nlohmann::json::parse(disjoint.out);
    CHECK(j1["separable"] == true);
    CHECK(j1["method"] == "non_essential");

    RunResult crossing = run_cli("separable --x aB --y aab");
    REQUIRE(crossing.exit_code == 0);
    auto j2 = nlohmann::json::parse(crossing.out);
    CHECK(j2["separable"] == false);
    CHECK(j2["intersection_count"] == 2);
    CHECK(j2["witness_points"].size() == 2);
}

TEST_CASE("center subcommand") {
    RunResult central = run_cli("center --combo \"2*aaa, -1*ab\"");
    REQUIRE(central.exit_code == 0);
    CHECK(nlohmann::json::parse(central.out)["central_candidate"] == true);

    RunResult witnessed = run_cli("center --combo \"1*aB\"");
    REQUIRE(witnessed.exit_code == 0);
    auto j = nlohmann::json::parse(witnessed.out);
    CHECK(j["central_candidate"] == false);
    CHECK(j["witness"]["m"] == 2);

    CHECK(run_cli("center --combo \"1*aBaB\"").exit_code == 2);  // unsupported shape
}

TEST_CASE("zigzag subcommand writes an SVG file") {
    std::string path = "cli_zigzag_test.svg";
    RunResult r = run_cli("zigzag --x aB --y aab --u 0.4 --svg " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content.find("<svg") != std::string::npos);
    CHECK(content.find("</svg>") != std::string::npos);
    std::remove(path.c_str());

    // disjoint classes have nothing to draw
    CHECK(run_cli("zigzag --x aB --y ab --u 0.4").exit_code == 2);
}

TEST_CASE("deterministic output bytes") {
    RunResult a = run_cli("bracket --x aB --y aab --m 3");
    RunResult b = run_cli("bracket --x aB --y aab --m 3");
    CHECK(a.out == b.out);
}

TEST_CASE("config file and traces both select the metric") {
    std::string path = "cli_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"surface": "pants", "lengths": [1.5, 2.0, 2.5], "tol": 1e-9, "radius": 8})";
    }
    RunResult r = run_cli("--config " + path + " separable --x aB --y aab");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["separable"] == false);
    std::remove(path.c_str());

    RunResult t = run_cli("separable --x aB --y aab --traces -3 -4 -5");
    CHECK(t.exit_code == 0);
    CHECK(nlohmann::json::parse(t.out)["intersection_count"] ==
          j["intersection_count"]);

    CHECK(run_cli("--config does_not_exist.json separable --x a --y b").exit_code == 2);
}
