// Command line front end: parses polynomial inputs, runs the requested
// pipeline stage, and emits deterministic JSON or CSV reports.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "polyhull/factor.hpp"
#include "polyhull/hull.hpp"
#include "polyhull/parse.hpp"
#include "polyhull/polyhedron.hpp"
#include "polyhull/report.hpp"
#include "polyhull/verify.hpp"

namespace {

using namespace polyhull;

struct Options {
    std::string p1_text, p2_text, P_text;
    double tol = 1e-9;
    double delta_margin = 1e-3;
    int samples = 0;  // 0 keeps each command's default
    int sep_degree = 6;
    std::uint64_t seed = 0;
    std::string json_path, csv_path;
    bool no_timestamp = false;
    bool tol_given = false;
};

void add_common_flags(CLI::App* cmd, Options& o, bool with_data_poly) {
    cmd->add_option("--p1", o.p1_text, "first defining polynomial, in z1, z2")->required();
    cmd->add_option("--p2", o.p2_text, "second defining polynomial, in z1, z2")->required();
    if (with_data_poly)
        cmd->add_option("--P", o.P_text, "data polynomial, in w1, w2")->required();
    cmd->add_option("--tol", o.tol, "numeric tolerance");
    cmd->add_option("--delta-margin", o.delta_margin,
                    "interior witness margin off the boundary and off L");
    cmd->add_option("--samples", o.samples, "sampling budget override");
    cmd->add_option("--sep-degree", o.sep_degree, "separation polynomial degree cap");
    cmd->add_option("--seed", o.seed, "seed for all randomized steps");
    cmd->add_option("--json", o.json_path, "write the JSON report to this path");
    cmd->add_option("--csv", o.csv_path, "write the CSV cloud to this path");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
}

BiPoly parse_defining(const std::string& text, const char* flag) {
    if (polynomial_alphabet(text) == 'w')
        throw ParseError(std::string(flag) + " must use the z alphabet", 0);
    return parse_polynomial(text);
}

BiPoly parse_data(const std::string& text) {
    if (polynomial_alphabet(text) == 'z')
        throw ParseError("--P must use the w alphabet", 0);
    return parse_polynomial(text);
}

ProblemSpec make_spec(const Options& o) {
    Tolerances tol;
    tol.numeric_tol = o.tol;
    tol.boundary_margin = o.delta_margin;
    return ProblemSpec::make(parse_defining(o.p1_text, "--p1"),
                             parse_defining(o.p2_text, "--p2"), parse_data(o.P_text),
                             tol, o.seed);
}

void emit_json(const Json& j, const std::string& path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path);
        os << text;
    }
}

ReportOptions report_options(const Options& o) {
    ReportOptions opts;
    opts.seed = o.seed;
    opts.timestamp = !o.no_timestamp;
    return opts;
}

std::vector<CheckReport> run_checks(const PolyhedronSpec& ps, const Options& o) {
    int samples = o.samples > 0 ? o.samples : 2304;
    double tol = o.tol_given ? o.tol : 1e-8;
    return {check_nondegeneracy(ps, samples, tol, o.seed), check_properness(ps),
            check_contractible_homogeneous(ps), leaf_assertion_report()};
}

int cmd_check(const Options& o) {
    PolyhedronSpec ps{parse_defining(o.p1_text, "--p1"), parse_defining(o.p2_text, "--p2")};
    std::vector<CheckReport> checks = run_checks(ps, o);

    Json j = report_envelope(ps, report_options(o));
    Json arr = Json::array();
    bool any_fail = false;
    for (const CheckReport& c : checks) {
        arr.push_back(to_json(c));
        any_fail = any_fail || c.verdict == Verdict::Fail;
    }
    j["checks"] = std::move(arr);
    emit_json(j, o.json_path);
    return any_fail ? 2 : 0;
}

int cmd_delta(const Options& o) {
    ProblemSpec spec = make_spec(o);
    BiPoly N = delta_numerator(spec);

    Json j = report_envelope(spec, report_options(o));
    bool degenerate = N.is_zero();
    Json delta;
    if (degenerate) {
        delta = Json{{"unit", GaussianRational(0).str()}, {"factors", Json::array()}};
    } else {
        delta = to_json(factor_delta(N));
    }
    delta["numerator"] = N.str();
    delta["degenerate"] = degenerate;
    j["delta"] = std::move(delta);
    emit_json(j, o.json_path);
    return degenerate ? 2 : 0;
}

int cmd_hull(const Options& o) {
    ProblemSpec spec = make_spec(o);
    HullReport report = classify(spec);
    report.approximation = decide_approximation(report);
    emit_json(hull_report_json(spec, report, report_options(o)), o.json_path);
    bool clean = report.classification == Classification::PolynomiallyConvex ||
                 report.classification == Classification::HullWithVarieties;
    return clean ? 0 : 2;
}

int cmd_verify(const Options& o) {
    ProblemSpec spec = make_spec(o);
    HullReport report = classify(spec);
    report.approximation = decide_approximation(report);
    PolyhedronSpec ps{spec.p1, spec.p2};

    Json j = report_envelope(spec, report_options(o));
    j["classification"] = to_string(report.classification);
    j["approximation"] = to_string(report.approximation);
    bool ok = true;

    // boundary relation on a fresh Gamma cloud
    int grid = o.samples > 0
                   ? std::max(2, static_cast<int>(std::lround(std::sqrt(o.samples))))
                   : 12;
    GammaCloud cloud = sample_gamma(ps, grid, grid, o.seed);
    Json residuals;
    if (cloud.points.empty()) {
        residuals["boundary"] = nullptr;
        ok = false;
    } else {
        ResidualStats stats = verify_boundary_relation(spec, cloud.points);
        residuals["boundary"] = to_json(stats);
        ok = ok && stats.max <= 1e-8;
    }

    // exact numerator route against the direct determinant evaluation
    double dev = cross_check_delta(spec, 64, o.seed);
    residuals["delta_cross_check"] = dev;
    ok = ok && dev <= 1e-8;
    j["verification"] = Json::object();
    j["verification"]["residuals"] = std::move(residuals);

    // |Delta| scan over graph-relation points off the varieties
    std::vector<BiPoly> factor_polys;
    for (const Factor& f : report.delta_factors.factors) factor_polys.push_back(f.poly);
    std::vector<PointPair> xs = find_x_samples(spec, 16, o.seed);
    TotallyRealScan scan = totally_real_scan(spec, xs, factor_polys, 1e-8);
    j["verification"]["totally_real_scan"] =
        Json{{"samples", static_cast<int>(scan.entries.size())},
             {"flagged", scan.flagged_count}};

    // separation oracle against the classification
    Json certs = Json::array();
    if (report.classification == Classification::HullWithVarieties ||
        report.classification == Classification::PolynomiallyConvex) {
        int sep_grid = 34;
        GammaCloud dense = sample_gamma(ps, sep_grid, sep_grid, o.seed + 1);
        std::vector<Point3> graph;
        for (const PointPair& z : dense.points)
            graph.push_back({z[0], z[1], boundary_data(spec, z)});

        std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
        auto push_cert = [&](const char* kind, const Point3& probe, bool expect_sep) {
            SeparationCertificate cert = separation_search(graph, probe, o.sep_degree);
            Json cj = to_json(cert);
            cj["kind"] = kind;
            cj["point"] = Json::array({Json::array({probe[0].real(), probe[0].imag()}),
                                       Json::array({probe[1].real(), probe[1].imag()}),
                                       Json::array({probe[2].real(), probe[2].imag()})});
            cj["expected_separated"] = expect_sep;
            cj["agrees"] = cert.separated == expect_sep;
            ok = ok && cert.separated == expect_sep;
            certs.push_back(std::move(cj));
        };

        for (const ComponentReport& piece : report.hull_pieces) {
            Cplx value = piece.c_constant
                             ? std::conj(piece.c_constant->to_complex())
                             : Cplx{0, 0};
            std::vector<PointPair> pts = sample_variety(
                piece.q, spec, 4, true, spec.tol.boundary_margin, rng);
            for (const PointPair& z : pts)
                push_cert("hull_piece", Point3{z[0], z[1], value}, false);
        }
        if (report.classification == Classification::PolynomiallyConvex) {
            for (size_t k = 0; k < graph.size() && certs.size() < 4; k += graph.size() / 4 + 1) {
                Point3 probe = graph[k];
                probe[2] += Cplx{0.15, 0.1};
                push_cert("perturbed_graph", probe, true);
            }
        }
    }
    j["verification"]["certificates"] = std::move(certs);
    j["verification"]["ok"] = ok;
    emit_json(j, o.json_path);
    return ok ? 0 : 2;
}

int cmd_sample_gamma(const Options& o) {
    PolyhedronSpec ps{parse_defining(o.p1_text, "--p1"), parse_defining(o.p2_text, "--p2")};
    int grid = o.samples > 0
                   ? std::max(2, static_cast<int>(std::lround(std::sqrt(o.samples))))
                   : 16;
    GammaCloud cloud = sample_gamma(ps, grid, grid, o.seed);

    if (!o.json_path.empty()) {
        Json j = report_envelope(ps, report_options(o));
        j["cloud"] = Json{{"points", static_cast<int>(cloud.points.size())},
                          {"dropped", cloud.dropped},
                          {"failed_fibers", cloud.failed_fibers}};
        emit_json(j, o.json_path);
    }
    if (o.csv_path.empty()) {
        write_gamma_csv(std::cout, cloud);
    } else {
        std::ofstream os(o.csv_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + o.csv_path);
        write_gamma_csv(os, cloud);
    }
    std::cerr << "gamma cloud: " << cloud.points.size() << " points, " << cloud.dropped
              << " dropped, " << cloud.failed_fibers << " failed fibers\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial hulls of boundary graphs over polynomial polyhedra"};
    app.require_subcommand(1);

    Options o;
    CLI::App* check = app.add_subcommand("check", "polyhedron hypothesis checks");
    add_common_flags(check, o, false);
    CLI::App* delta = app.add_subcommand("delta", "delta numerator and factorization");
    add_common_flags(delta, o, true);
    CLI::App* hull = app.add_subcommand("hull", "full classification and verdict");
    add_common_flags(hull, o, true);
    CLI::App* verify = app.add_subcommand("verify", "numeric oracles for the classification");
    add_common_flags(verify, o, true);
    CLI::App* gamma = app.add_subcommand("sample-gamma", "distinguished boundary CSV cloud");
    add_common_flags(gamma, o, false);

    try {
        app.parse(argc, argv);
        CLI::App* sub = app.get_subcommands().front();
        o.tol_given = sub->count("--tol") > 0;
        if (sub == check) return cmd_check(o);
        if (sub == delta) return cmd_delta(o);
        if (sub == hull) return cmd_hull(o);
        if (sub == verify) return cmd_verify(o);
        return cmd_sample_gamma(o);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
