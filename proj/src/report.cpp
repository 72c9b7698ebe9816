#include "polyhull/report.hpp"

#include <chrono>
#include <ctime>

namespace polyhull {

const char* const kVersion = "0.1.0";

namespace {

Json complex_json(const Cplx& v) { return Json::array({v.real(), v.imag()}); }

Json point_json(const PointPair& z) {
    return Json::array({complex_json(z[0]), complex_json(z[1])});
}

Json witness_json(const Witness& w) {
    return Json{{"point", point_json(w.point)}, {"residual", w.residual}};
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Json to_json(const CheckReport& r) {
    Json witnesses = Json::array();
    for (const Witness& w : r.witnesses) witnesses.push_back(witness_json(w));
    Json j{{"name", r.name},
           {"verdict", to_string(r.verdict)},
           {"method", to_string(r.method)},
           {"witnesses", std::move(witnesses)},
           {"note", r.note}};
    j["observed_min"] = r.observed_min ? Json(*r.observed_min) : Json(nullptr);
    return j;
}

Json to_json(const ComponentReport& r) {
    Json j{{"variety", r.q.str()},
           {"constant", r.c_constant ? Json(r.c_constant->str()) : Json(nullptr)},
           {"p_psi_constant_exact", r.p_psi_constant_exact},
           {"h_psi_matches_exact", r.h_psi_matches_exact},
           {"in_j", r.in_j},
           {"evidence", to_string(r.evidence_mode)},
           {"note", r.note}};
    j["gamma_intersection"] = Json{{"nonempty", r.gamma_intersection.nonempty},
                                   {"witness", point_json(r.gamma_intersection.witness)},
                                   {"residual", r.gamma_intersection.residual}};
    j["interior_witness"] =
        r.interior_witness ? witness_json(*r.interior_witness) : Json(nullptr);
    return j;
}

Json to_json(const FactorList& f) {
    Json factors = Json::array();
    for (const Factor& fac : f.factors)
        factors.push_back(Json{{"poly", fac.poly.str()}, {"multiplicity", fac.multiplicity}});
    return Json{{"unit", f.unit.str()}, {"factors", std::move(factors)}};
}

Json to_json(const SeparationCertificate& c) {
    Json coeffs = Json::array();
    for (const Cplx& v : c.coefficients) coeffs.push_back(complex_json(v));
    return Json{{"degree", c.degree},
                {"coefficients", std::move(coeffs)},
                {"value_at_point", complex_json(c.value_at_point)},
                {"sup_on_cloud", c.sup_on_cloud},
                {"separated", c.separated}};
}

Json to_json(const ResidualStats& s) {
    return Json{{"max", s.max}, {"mean", s.mean}, {"count", s.count}};
}

Json report_envelope(const ProblemSpec& spec, const ReportOptions& opts) {
    Json j;
    j["input"] = Json{{"p1", spec.p1.str()},
                      {"p2", spec.p2.str()},
                      {"P", spec.P.str("w1", "w2")},
                      {"m", spec.m},
                      {"n", spec.n}};
    j["seed"] = opts.seed;
    j["version"] = kVersion;
    if (opts.timestamp) j["timestamp"] = iso_timestamp();
    return j;
}

Json report_envelope(const PolyhedronSpec& spec, const ReportOptions& opts) {
    Json j;
    j["input"] = Json{{"p1", spec.p1.str()}, {"p2", spec.p2.str()}};
    j["seed"] = opts.seed;
    j["version"] = kVersion;
    if (opts.timestamp) j["timestamp"] = iso_timestamp();
    return j;
}

Json hull_report_json(const ProblemSpec& spec, const HullReport& report,
                      const ReportOptions& opts) {
    Json j = report_envelope(spec, opts);

    Json checks = Json::array();
    for (const CheckReport& c : report.hypothesis_checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);

    Json delta = to_json(report.delta_factors);
    delta["numerator"] = report.delta_numerator.str();
    delta["cross_check"] = report.delta_cross_check;
    j["delta"] = std::move(delta);

    Json components = Json::array();
    for (const ComponentReport& c : report.components) components.push_back(to_json(c));
    j["components"] = std::move(components);

    Json pieces = Json::array();
    for (const ComponentReport& c : report.hull_pieces) {
        pieces.push_back(Json{{"variety", c.q.str()},
                              {"value", c.c_constant ? Json(c.c_constant->conj().str())
                                                     : Json(nullptr)},
                              {"evidence", to_string(c.evidence_mode)}});
    }
    j["hull_pieces"] = std::move(pieces);
    j["identification_numeric"] = report.identification_numeric;

    j["classification"] = to_string(report.classification);
    if (!report.hypothesis_failure_reason.empty())
        j["hypothesis_failure_reason"] = report.hypothesis_failure_reason;
    j["approximation"] = to_string(report.approximation);
    return j;
}

}  // namespace polyhull
