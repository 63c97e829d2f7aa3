#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd =
        "SOURCE_DATE_EPOCH=1700000000 " EPBOUND_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

using nlohmann::json;

} // namespace

TEST_CASE("solve: derived variant reports both bound states") {
    const auto r = run("solve --variant derived");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.contains("manifest"));
    CHECK(doc["manifest"]["command"] == "solve");

    bool saw_1s = false, saw_deep = false;
    for (const auto& state : doc["results"]) {
        if (state.contains("error"))
            continue;
        const double E = state["E"].get<double>();
        if (state["label"] == "positronium_1s" && std::abs(E - 1.99998669) < 1e-6)
            saw_1s = true;
        if (state["label"] == "deep" && std::abs(E + 7.94318e-3) < 1e-4)
            saw_deep = true;
    }
    CHECK(saw_1s);
    CHECK(saw_deep);
}

TEST_CASE("solve: invalid custom alpha is a usage error") {
    CHECK(run("--alpha-mode custom --alpha 0.0 solve").exit_code == 1);
}

TEST_CASE("solve: both variants give four variational states") {
    const auto r = run("solve --variant both");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    int variational = 0, closed_form = 0;
    for (const auto& state : doc["results"]) {
        if (!state.contains("method"))
            continue;
        if (state["method"] == "variational") ++variational;
        if (state["method"] == "closed_form") ++closed_form;
    }
    CHECK(variational == 4);
    CHECK(closed_form == 2);
}

TEST_CASE("scan: degenerate single-row grid") {
    const auto r = run("scan --beta-min 0 --beta-max 0 --steps 1 --variant derived");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("beta,E1,E2,E3,real_count,variant") == 0);
    CHECK(r.output.find("\n0,2,0,-2,3,derived") != std::string::npos);
}

TEST_CASE("scan: byte-deterministic") {
    const std::string args = "scan --beta-min 1e-3 --beta-max 1.0 --steps 50";
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("mass: 1s state") {
    const auto r = run("mass --state 1s --variant derived");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    REQUIRE(!doc["results"].empty());
    const double derived = doc["results"][0]["mass_derived_over_m"].get<double>();
    CHECK(std::abs(derived - 1.99995) < 1e-3);
    CHECK(doc.contains("discrepancy_report"));
}

TEST_CASE("mass: deep state entry present") {
    const auto r = run("mass --state deep --variant derived");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    const double derived = doc["results"][0]["mass_derived_over_m"].get<double>();
    CHECK(std::abs(derived - (-0.0097293 * 2.0)) < 4e-4);
}

TEST_CASE("mass: custom threshold point") {
    const auto r = run("mass --E 2 --beta 1e-6");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    const double derived = doc["results"][0]["mass_derived_over_m"].get<double>();
    CHECK(std::abs(derived - 2.0) < 1e-4);
}

TEST_CASE("kinematics: center-of-mass frame returns f = s") {
    const auto r = run("kinematics --s 1,0,0 --g 0,0,0");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["results"]["f"][0].get<double>() == 1.0);
    CHECK(doc["results"]["residual"].get<double>() == 0.0);
}

TEST_CASE("check: passes clean, fails when perturbed") {
    CHECK(run("check").exit_code == 0);
    CHECK(run("check --perturb").exit_code == 1);
}
