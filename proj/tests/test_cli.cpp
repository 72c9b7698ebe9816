#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "polyhull/hull.hpp"
#include "polyhull/parse.hpp"
#include "test_util.hpp"

using namespace polyhull;
using namespace polyhull::testutil;
using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POLYHULL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string tmp_path(const char* name) {
    return std::string("/tmp/polyhull_cli_") + std::to_string(::getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("hull subcommand reproduces the glued-variety example") {
    RunResult r = run_cli(
        "hull --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+w2\" --seed 7 --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);

    CHECK(j["classification"] == "HullWithVarieties");
    CHECK(j["approximation"] == "Fails");
    CHECK(j["version"] == "0.1.0");
    CHECK(j["seed"] == 7);
    CHECK(!j.contains("timestamp"));
    CHECK(j["input"]["p1"] == "z1 + z2");
    CHECK(j["input"]["m"] == 1);
    CHECK(j["input"]["n"] == 1);

    REQUIRE(j["hull_pieces"].size() == 1);
    CHECK(parse_polynomial(j["hull_pieces"][0]["variety"]) ==
          parse_polynomial("z1*z2 + z1 + z2"));
    CHECK(j["hull_pieces"][0]["value"] == "0");
    CHECK(j["hull_pieces"][0]["evidence"] == "Exact");
    CHECK(j["identification_numeric"] == true);

    REQUIRE(j["delta"]["factors"].size() == 3);
    CHECK(j["delta"]["cross_check"].get<double>() <= 1e-8);
    CHECK(parse_polynomial(j["delta"]["numerator"]) ==
          parse_polynomial("(z1+z2+z1*z2)(z1+z2-z1*z2)(z2-z1)"));
    CHECK(j["checks"].size() == 4);
    for (const Json& c : j["checks"]) CHECK(c["verdict"] != "Fail");
    CHECK(j["components"].size() == 3);
}

TEST_CASE("hull subcommand reproduces the polynomially convex example") {
    RunResult r = run_cli(
        "hull --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+2*w2\" --seed 7 --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["classification"] == "PolynomiallyConvex");
    CHECK(j["approximation"] == "Holds");
    CHECK(j["hull_pieces"].empty());
}

TEST_CASE("hull subcommand handles the weighted difference pair") {
    RunResult r = run_cli(
        "hull --p1 \"2*z1+z2^2\" --p2 \"z1-z2^2\" --P \"w1-w2\" --seed 3 --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["classification"] == "HullWithVarieties");
    REQUIRE(j["hull_pieces"].size() == 1);
    CHECK(parse_polynomial(j["hull_pieces"][0]["variety"]) ==
          parse_polynomial("z2^2 + 1/2*z1"));
    CHECK(j["hull_pieces"][0]["value"] == "0");

    r = run_cli(
        "hull --p1 \"2*z1+z2^2\" --p2 \"z1-z2^2\" --P \"w1+2*w2\" --seed 3 --no-timestamp");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j["classification"] == "PolynomiallyConvex");
    CHECK(j["approximation"] == "Holds");
}

TEST_CASE("identical inputs and seed give byte-identical reports") {
    std::string a = tmp_path("rep_a.json"), b = tmp_path("rep_b.json");
    std::string args =
        "hull --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+w2\" --seed 42 --no-timestamp --json ";
    RunResult ra = run_cli(args + a);
    RunResult rb = run_cli(args + b);
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    CHECK(ra.out.empty());
    std::string bytes_a = slurp(a), bytes_b = slurp(b);
    CHECK(!bytes_a.empty());
    CHECK(bytes_a == bytes_b);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("timestamps appear unless suppressed") {
    RunResult r = run_cli("delta --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+w2\"");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.contains("timestamp"));
    std::string ts = j["timestamp"];
    CHECK(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[19] == 'Z');
}

TEST_CASE("delta subcommand factors the numerator and flags degeneracy") {
    RunResult r = run_cli(
        "delta --p1 \"2*z1+z2^2\" --p2 \"z1-z2^2\" --P \"w1-w2\" --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["delta"]["degenerate"] == false);
    CHECK(j["delta"]["unit"] == "-36");
    REQUIRE(j["delta"]["factors"].size() == 3);

    BiPoly numerator = parse_polynomial(j["delta"]["numerator"]);
    BiPoly product = BiPoly(GaussianRational(-36));
    for (const Json& f : j["delta"]["factors"]) {
        BiPoly q = parse_polynomial(f["poly"]);
        for (int k = 0; k < f["multiplicity"].get<int>(); ++k) product = product * q;
    }
    CHECK(product == numerator);

    r = run_cli("delta --p1 \"z1\" --p2 \"z2\" --P \"w1\" --no-timestamp");
    CHECK(r.exit_code == 2);
    j = Json::parse(r.out);
    CHECK(j["delta"]["degenerate"] == true);
    CHECK(parse_polynomial(j["delta"]["numerator"]).is_zero());
}

TEST_CASE("check subcommand flags the degenerate wedge pair") {
    RunResult r = run_cli("check --p1 \"z1+z2^2\" --p2 \"z1-z2^2\" --no-timestamp --seed 5");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    REQUIRE(j["checks"].size() == 4);

    const Json& nd = j["checks"][0];
    CHECK(nd["name"] == "non-degeneracy");
    CHECK(nd["verdict"] == "Fail");
    REQUIRE(!nd["witnesses"].empty());
    const Json& w = nd["witnesses"][0];
    double re1 = w["point"][0][0], im1 = w["point"][0][1];
    double re2 = w["point"][1][0], im2 = w["point"][1][1];
    CHECK(std::abs(std::abs(Cplx{re1, im1}) - 1.0) <= 1e-6);
    CHECK(std::abs(Cplx{re2, im2}) <= 1e-6);
    CHECK(w["residual"].get<double>() <= 1e-8);

    r = run_cli("check --p1 \"2*z1+z2^2\" --p2 \"z1-z2^2\" --no-timestamp --seed 5");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j["checks"][0]["verdict"] == "Pass");
}

TEST_CASE("sample-gamma writes the CSV cloud deterministically") {
    std::string a = tmp_path("cloud_a.csv"), b = tmp_path("cloud_b.csv");
    std::string args = "sample-gamma --p1 \"z1\" --p2 \"z2\" --samples 64 --seed 9 --csv ";
    RunResult ra = run_cli(args + a);
    CHECK(ra.exit_code == 0);
    RunResult rb = run_cli(args + b);
    CHECK(rb.exit_code == 0);

    std::string text = slurp(a);
    CHECK(slurp(b) == text);
    std::istringstream is(text);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "re_z1,im_z1,re_z2,im_z2,theta,phi,residual");
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++rows;
        std::istringstream ls(line);
        double v;
        char comma;
        for (int k = 0; k < 7; ++k) {
            REQUIRE(static_cast<bool>(ls >> v));
            if (k < 6) REQUIRE(static_cast<bool>(ls >> comma));
            if (k == 6) CHECK(v <= 1e-8);
        }
    }
    CHECK(rows == 64);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("verify subcommand confirms the classification numerically") {
    RunResult r = run_cli(
        "verify --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+2*w2\" --seed 11 --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["classification"] == "PolynomiallyConvex");
    CHECK(j["verification"]["ok"] == true);
    CHECK(j["verification"]["residuals"]["boundary"]["max"].get<double>() <= 1e-8);
    CHECK(j["verification"]["residuals"]["delta_cross_check"].get<double>() <= 1e-8);
    REQUIRE(!j["verification"]["certificates"].empty());
    for (const Json& c : j["verification"]["certificates"]) {
        CHECK(c["kind"] == "perturbed_graph");
        CHECK(c["expected_separated"] == true);
        CHECK(c["agrees"] == true);
    }

    r = run_cli(
        "verify --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+w2\" --seed 11 --no-timestamp");
    CHECK(r.exit_code == 0);
    j = Json::parse(r.out);
    CHECK(j["classification"] == "HullWithVarieties");
    CHECK(j["verification"]["ok"] == true);
    REQUIRE(!j["verification"]["certificates"].empty());
    for (const Json& c : j["verification"]["certificates"]) {
        CHECK(c["kind"] == "hull_piece");
        CHECK(c["expected_separated"] == false);
        CHECK(c["agrees"] == true);
    }
}

TEST_CASE("exit codes distinguish degenerate verdicts and input errors") {
    CHECK(run_cli("hull --p1 \"z1\" --p2 \"z2\" --P \"w1\" --no-timestamp").exit_code == 2);
    CHECK(run_cli("hull --p1 \"z1+\" --p2 \"z2\" --P \"w1\"").exit_code == 1);
    CHECK(run_cli("hull --p1 \"z1\" --p2 \"z2\" --P \"z1+w1\"").exit_code == 1);
    CHECK(run_cli("hull --p1 \"w1\" --p2 \"z2\" --P \"w1\"").exit_code == 1);
    CHECK(run_cli("hull --p2 \"z2\" --P \"w1\"").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("tolerance and margin flags are accepted and reflected in the report") {
    RunResult r = run_cli(
        "hull --p1 \"z1+z2\" --p2 \"z1*z2\" --P \"w1+w2\" --tol 1e-10 "
        "--delta-margin 5e-3 --sep-degree 4 --seed 2 --no-timestamp");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["classification"] == "HullWithVarieties");
}
