#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

std::string cli_path() {
    if (const char* p = std::getenv("REEBLENS_CLI")) return p;
#ifdef REEBLENS_CLI_PATH
    return REEBLENS_CLI_PATH;
#else
    REQUIRE_MESSAGE(false, "REEBLENS_CLI not set");
    return "";
#endif
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

using nlohmann::json;

} // namespace

TEST_CASE("invariants: json for one class") {
    RunResult r = run("invariants 11 1 1 1 --class 5 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["k_a"] == "8/11");
    CHECK(j["h_a"] == "30/11");
    CHECK(j["h_tilde_a"] == "30/11");
    CHECK(j["chern_order"] == 11);
    CHECK(j["positive"] == true);
    CHECK(j["strictly_positive"] == true);
}

TEST_CASE("invariants: table with no positive class") {
    RunResult r = run("invariants 5 1 -1 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    int positives = 0;
    for (const auto& cls : j["classes"])
        if (cls["positive"].is_boolean() && cls["positive"].get<bool>()) ++positives;
    CHECK(positives == 0);
}

TEST_CASE("invariants: worked half-weight class") {
    RunResult r = run("invariants 4 1 1 --class 2 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["k_a"] == "1");
    CHECK(j["h_a"] == "0");
    CHECK(j["h_tilde_a"] == "2");
    CHECK(j["positive"] == true);
    CHECK(j["strictly_positive"] == false);
}

TEST_CASE("invariants: invalid weights exit 2 and name the rule") {
    RunResult r = run("invariants 4 1 2 --format json");
    CHECK(r.exit_code == 2);
    RunResult r2 = run("invariants 1 1 --format json");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("bott csv output") {
    RunResult r = run("bott 11 1 1 1 --class 5 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("angle_turns,value,s_plus,s_minus\n") == 0);
    CHECK(r.out.find("0,-3/11,0,0") != std::string::npos);
    CHECK(r.out.find("5/11,-3/11,3,0") != std::string::npos);

    RunResult down = run("bott 4 1 1 --class 2 --format csv");
    REQUIRE(down.exit_code == 0);
    // down jump at the half turn: s_plus = s_minus = nu_1 (per copy)
    CHECK(down.out.find("1/2,-2,2,2") != std::string::npos);

    RunResult eps = run("bott 11 1 1 1 --class 5 --eps 1/100 --format csv");
    REQUIRE(eps.exit_code == 0);
    // up jump just before the weight angle: 5/11 - 1/100 = 489/1100
    CHECK(eps.out.find("489/1100,") != std::string::npos);
    CHECK(eps.out.find(",3,0") != std::string::npos);
}

TEST_CASE("bott svg output and eps validation") {
    RunResult svg = run("bott 4 1 1 --class 1 --format svg");
    REQUIRE(svg.exit_code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.find("circle") != std::string::npos);

    RunResult bad = run("bott 11 1 1 1 --class 5 --eps 1/2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("esh tables") {
    RunResult r = run("esh 1 2 --class 1 --kmax 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["min_degree"] == "1");
    CHECK(j["k_a_match"] == true);
    REQUIRE(j["ranks"].size() == 4);
    CHECK(j["ranks"][0]["degree"] == "1");
    CHECK(j["ranks"][3]["degree"] == "7");

    RunResult l11 = run("esh 2 11 --class 1 --kmax 1");
    json j11 = json::parse(l11.out);
    CHECK(j11["min_degree"] == "-16/11");
    CHECK(j11["k_a_match"] == true);

    RunResult filtered = run("esh 1 2 --class 1 --kmax 1 --scale 1 --action 2");
    REQUIRE(filtered.exit_code == 0);
    json jf = json::parse(filtered.out);
    CHECK(jf["ranks"].size() == 4); // iterates k = 1, 2 survive below 2 pi

    RunResult on_spectrum = run("esh 1 2 --class 1 --scale 1 --action 3/2");
    CHECK(on_spectrum.exit_code == 2);
}

TEST_CASE("verify suites run clean") {
    RunResult ex = run("verify examples");
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("ok") != std::string::npos);
    CHECK(ex.out.find("FAIL") == std::string::npos);

    RunResult sharp = run("verify sharpness --json");
    CHECK(sharp.exit_code == 0);
    // each line parses as a check record
    std::istringstream lines(sharp.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        CHECK(j["pass"] == true);
        ++count;
    }
    CHECK(count > 0);

    RunResult counter = run("verify counterexamples");
    CHECK(counter.exit_code == 0);

    RunResult unknown = run("verify nothing");
    CHECK(unknown.exit_code == 2);
}
