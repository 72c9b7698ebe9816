#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyhull/bipoly.hpp"
#include "polyhull/factor.hpp"
#include "polyhull/laurent.hpp"
#include "polyhull/numeric.hpp"
#include "polyhull/polyhedron.hpp"

namespace polyhull {

struct Tolerances {
    double numeric_tol = 1e-9;
    double boundary_margin = 1e-3;  // delta: interior witnesses keep |p_i| <= 1 - delta
};

// The full problem: polyhedron map Psi = (p1, p2) in z1, z2 and the data
// polynomial P in w1, w2. The boundary data is conj(P o Psi) on Gamma.
struct ProblemSpec {
    BiPoly p1, p2, P;
    int m = 0;  // deg_{w1} P
    int n = 0;  // deg_{w2} P
    Tolerances tol;
    std::uint64_t seed = 0;

    static ProblemSpec make(BiPoly p1, BiPoly p2, BiPoly P, Tolerances tol = {},
                            std::uint64_t seed = 0);
};

struct DeltaIdenticallyZero : std::runtime_error {
    DeltaIdenticallyZero() : std::runtime_error("delta numerator is identically zero") {}
};

enum class EvidenceMode { Exact, NumericOnly, Flagged };
const char* to_string(EvidenceMode m);

struct GammaIntersection {
    bool nonempty = false;
    PointPair witness{};
    double residual = 0;
};

// Verdict of the membership conditions for one irreducible factor q of the
// delta numerator: is the graph over Z_q cap closure(D2) glued into the hull?
struct ComponentReport {
    BiPoly q;
    std::optional<GaussianRational> c_constant;  // value of P o Psi on Z_q
    bool p_psi_constant_exact = false;
    bool h_psi_matches_exact = false;
    GammaIntersection gamma_intersection;
    std::optional<Witness> interior_witness;  // point of Z_q cap D2 off the axes set L
    bool in_j = false;
    EvidenceMode evidence_mode = EvidenceMode::Exact;
    std::string note;
};

enum class Classification {
    PolynomiallyConvex,
    HullWithVarieties,
    DegenerateDeltaZero,
    HypothesisFailure,
};
const char* to_string(Classification c);

enum class ApproximationVerdict { Holds, Fails, Undetermined };
const char* to_string(ApproximationVerdict v);

struct HullReport {
    Classification classification = Classification::PolynomiallyConvex;
    std::string hypothesis_failure_reason;
    BiPoly delta_numerator;
    FactorList delta_factors;                // of the numerator, multiplicities informational
    std::vector<ComponentReport> components; // every analyzed factor
    std::vector<ComponentReport> hull_pieces;  // the subset with in_j = true
    ApproximationVerdict approximation = ApproximationVerdict::Undetermined;
    // The identification of each hull piece with Z_j cap closure(D2) is
    // validated by sampling, not proved.
    bool identification_numeric = true;
    std::vector<CheckReport> hypothesis_checks;
    double delta_cross_check = 0;  // max relative deviation, exact vs direct
};

// h = K / (w1^m w2^n) with K the reflection of P.
LaurentFraction build_h(const ProblemSpec& spec);

// N = p1^{m+1} p2^{n+1} * Delta as an exact polynomial:
//   A  = (d_{w1} P) o Psi            B  = (d_{w2} P) o Psi
//   C1 = (w1 d_{w1} K - m K) o Psi   C2 = (w2 d_{w2} K - n K) o Psi
//   N  = (A C2 p1 - B C1 p2) * Jac(Psi)
BiPoly delta_numerator(const ProblemSpec& spec);

// Irreducible factorization of N (square-free component set; multiplicities
// of N recorded informationally). Throws DeltaIdenticallyZero on N = 0.
FactorList factor_delta(const BiPoly& N);

ComponentReport analyze_component(const BiPoly& q, const ProblemSpec& spec);

// Full pipeline: hypothesis checks, delta numerator, factorization,
// component analysis, classification.
HullReport classify(const ProblemSpec& spec);

ApproximationVerdict decide_approximation(const HullReport& report);

// conj(P o Psi) evaluated at a point (through the conjugate).
Cplx boundary_data(const ProblemSpec& spec, const PointPair& z);

// h o Psi evaluated numerically; infinite off p1 p2 != 0.
Cplx h_psi(const ProblemSpec& spec, const PointPair& z);

// Direct floating evaluation of Delta (determinant product), for cross-checks.
Cplx delta_direct(const ProblemSpec& spec, const PointPair& z);

// Sample points of Z_q (branches over random slices), optionally restricted
// to the closed polyhedron with an off-L margin.
std::vector<PointPair> sample_variety(const BiPoly& q, const ProblemSpec& spec,
                                      int count, bool inside_closure, double off_l_margin,
                                      std::mt19937_64& rng);

}  // namespace polyhull
