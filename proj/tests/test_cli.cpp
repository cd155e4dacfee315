// End-to-end tests that invoke the installed CLI binary and inspect its
// stdout and exit status.  The binary path is injected by the build as
// RECTWALK_CLI_PATH so the tests work from any build directory.
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

#include "rectwalk/hitting.hpp"
#include "rectwalk/scmap.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>
#include <sys/wait.h>

#ifndef RECTWALK_CLI_PATH
#error "RECTWALK_CLI_PATH must be defined by the build"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = std::string(RECTWALK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.out.append(buf, n);
    }
    const int status = ::pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    res.exit_code = WEXITSTATUS(status);
    return res;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("cli: ratio via quadrature emits json with metadata") {
    auto res = run_cli("ratio --aspect 10 --exponent 0.625 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    REQUIRE(j.is_object());
    CHECK(j.at("method").get<std::string>() == "quadrature");
    CHECK(j.at("aspect").get<double>() == 10.0);
    CHECK(j.at("exponent").get<double>() == 0.625);
    CHECK(testutil::rel_err(j.at("ratio").get<double>(), 6.6829899353055396e-05) < 1e-8);
    CHECK(j.at("regime_warning").get<bool>() == false);
    CHECK(j.at("err_estimate").get<double>() >= 0.0);
}

TEST_CASE("cli: closed method matches the library for the brownian case") {
    auto res = run_cli("ratio --aspect 10 --exponent 1 --method closed --format json --digits 17");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j.at("method").get<std::string>() == "closed");
    CHECK(testutil::rel_err(j.at("ratio").get<double>(), 3.8375894519599411e-07) < 1e-12);
}

TEST_CASE("cli: probability of the square is one half") {
    auto res = run_cli("probability --aspect 1 --exponent 0.625 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(testutil::rel_err(j.at("probability").get<double>(), 0.5) < 1e-9);
}

TEST_CASE("cli: aspect below one is canonicalized with a notice, value not inverted") {
    auto res = run_cli("ratio --aspect 0.5 --exponent 1 --method closed --format json --digits 17");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j.at("aspect").get<double>() == 2.0);
    REQUIRE(j.contains("notice"));
    CHECK(j.at("notice").get<std::string>().find("swapped") != std::string::npos);

    const auto alpha = rectwalk::alpha_from_aspect(2.0);
    const double want = rectwalk::ratio_closed_rw(alpha).value;
    CHECK(testutil::rel_err(j.at("ratio").get<double>(), want) < 1e-12);
}

TEST_CASE("cli: repeated invocations are byte identical") {
    const std::string args = "ratio --aspect 3 --exponent 0.625 --method all --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("cli: printed ratio round-trips through parse and reprint") {
    auto res = run_cli("ratio --aspect 10 --exponent 1 --method closed --format json");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    const double ratio = j.at("ratio").get<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", ratio);
    CHECK(res.out.find(buf) != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish usage and domain errors") {
    CHECK(run_cli("no-such-verb").exit_code == 2);
    CHECK(run_cli("ratio --exponent 1").exit_code == 2);  // missing --aspect

    auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("alpha") != std::string::npos);

    CHECK(run_cli("ratio --aspect 2 --exponent -1").exit_code == 1);
    CHECK(run_cli("ratio --aspect 0 --exponent 1").exit_code == 1);
    CHECK(run_cli("ratio --aspect 2 --exponent 0.625 --method closed").exit_code == 1);
    CHECK(run_cli("ratio --aspect 2 --exponent 1 --tol 1e-16").exit_code == 1);
}

TEST_CASE("cli: table emits a csv header and one row per cell") {
    auto res = run_cli(
        "table --aspect-min 2 --aspect-max 3 --aspect-step 0.5 "
        "--exponents 0.625,1 --method leading --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(count_lines(res.out) == 7);  // header + 3 aspects x 2 exponents
    CHECK(res.out.rfind("aspect,exponent,method", 0) == 0);
}

TEST_CASE("cli: map samples are symmetric across the end midpoint") {
    auto res = run_cli("map --aspect 2 --samples 5 --format csv");
    REQUIRE(res.exit_code == 0);
    REQUIRE(count_lines(res.out) == 6);  // header + 5 samples

    // Split into lines and pull the u, x, y columns.
    std::vector<std::string> lines;
    std::string cur;
    for (char c : res.out) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    REQUIRE(lines.size() == 6);
    auto col = [](const std::string& line, int index) {
        std::size_t start = 0;
        for (int i = 0; i < index; ++i) start = line.find(',', start) + 1;
        std::size_t end = line.find(',', start);
        return std::stod(line.substr(start, end - start));
    };
    const double u_first = col(lines[1], 0);
    const double u_last = col(lines[5], 0);
    CHECK(u_first == -u_last);
    // Middle sample is the end midpoint, which maps to the origin.
    CHECK(col(lines[3], 0) == 0.0);
    CHECK(col(lines[3], 1) == 0.0);
    CHECK(col(lines[3], 2) == 0.0);
}

TEST_CASE("cli: map json is an array with one object per sample") {
    auto res = run_cli("map --aspect 2 --samples 4 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = parse_json(res.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);
    for (const auto& row : j) {
        CHECK(row.contains("u"));
        CHECK(row.contains("x"));
        CHECK(row.contains("y"));
        CHECK(row.contains("deriv_abs"));
    }
}

TEST_CASE("cli: alpha text output names the excess") {
    auto res = run_cli("alpha --aspect 10");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("excess") != std::string::npos);
}

TEST_CASE("cli: alpha theta and asymptotic methods agree at aspect ten") {
    auto theta = run_cli("alpha --aspect 10 --method theta --format json --digits 17");
    auto asym = run_cli("alpha --aspect 10 --method asymptotic --format json --digits 17");
    REQUIRE(theta.exit_code == 0);
    REQUIRE(asym.exit_code == 0);
    const double e1 = parse_json(theta.out).at("excess").get<double>();
    const double e2 = parse_json(asym.out).at("excess").get<double>();
    CHECK(testutil::rel_err(e1, e2) < 1e-12);
}
