#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "polyhull/hull.hpp"
#include "polyhull/polyhedron.hpp"
#include "polyhull/verify.hpp"

namespace polyhull {

using Json = nlohmann::json;

Json to_json(const CheckReport& r);
Json to_json(const ComponentReport& r);
Json to_json(const FactorList& f);
Json to_json(const SeparationCertificate& c);
Json to_json(const ResidualStats& s);

// Cross-module report envelope: input echo, seed, version, optional
// ISO-8601 timestamp.
struct ReportOptions {
    std::uint64_t seed = 0;
    bool timestamp = true;
};
Json report_envelope(const ProblemSpec& spec, const ReportOptions& opts);
Json report_envelope(const PolyhedronSpec& spec, const ReportOptions& opts);

Json hull_report_json(const ProblemSpec& spec, const HullReport& report,
                      const ReportOptions& opts);

extern const char* const kVersion;

}  // namespace polyhull
