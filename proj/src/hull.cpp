#include "polyhull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "polyhull/verify.hpp"

namespace polyhull {

LaurentFraction::LaurentFraction(BiPoly num, int p1, int p2)
    : numerator(std::move(num)), pow1(p1), pow2(p2) {
    if (pow1 < 0 || pow2 < 0) throw std::invalid_argument("negative denominator exponent");
    if (numerator.is_zero()) {
        pow1 = pow2 = 0;
        return;
    }
    Exponent low = numerator.min_exponents();
    int d1 = std::min(low.e1, pow1), d2 = std::min(low.e2, pow2);
    if (d1 > 0 || d2 > 0) {
        BiPoly shifted;
        for (const auto& [e, c] : numerator.terms())
            shifted += BiPoly::monomial({e.e1 - d1, e.e2 - d2}, c);
        numerator = shifted;
        pow1 -= d1;
        pow2 -= d2;
    }
}

std::complex<double> LaurentFraction::evaluate(std::complex<double> w1,
                                               std::complex<double> w2) const {
    std::complex<double> den = std::pow(w1, pow1) * std::pow(w2, pow2);
    return numerator.evaluate(w1, w2) / den;
}

std::string LaurentFraction::str(const char* v1, const char* v2) const {
    std::string num = numerator.str(v1, v2);
    if (pow1 == 0 && pow2 == 0) return num;
    auto power = [](const char* v, int p) {
        std::string s = v;
        if (p > 1) s += "^" + std::to_string(p);
        return s;
    };
    std::string den;
    if (pow1 > 0) den = power(v1, pow1);
    if (pow2 > 0) {
        if (!den.empty()) den += "*";
        den += power(v2, pow2);
    }
    return "(" + num + ") / (" + den + ")";
}

ProblemSpec ProblemSpec::make(BiPoly p1, BiPoly p2, BiPoly P, Tolerances tol,
                              std::uint64_t seed) {
    if (p1.is_constant() || p2.is_constant())
        throw std::invalid_argument("polyhedron polynomials must be non-constant");
    if (P.is_constant()) throw std::invalid_argument("data polynomial must be non-constant");
    ProblemSpec spec;
    spec.m = std::max(P.degree(1), 0);
    spec.n = std::max(P.degree(2), 0);
    spec.p1 = std::move(p1);
    spec.p2 = std::move(p2);
    spec.P = std::move(P);
    spec.tol = tol;
    spec.seed = seed;
    return spec;
}

const char* to_string(EvidenceMode m) {
    switch (m) {
        case EvidenceMode::Exact: return "Exact";
        case EvidenceMode::NumericOnly: return "NumericOnly";
        default: return "Flagged";
    }
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::PolynomiallyConvex: return "PolynomiallyConvex";
        case Classification::HullWithVarieties: return "HullWithVarieties";
        case Classification::DegenerateDeltaZero: return "DegenerateDeltaZero";
        default: return "HypothesisFailure";
    }
}

const char* to_string(ApproximationVerdict v) {
    switch (v) {
        case ApproximationVerdict::Holds: return "Holds";
        case ApproximationVerdict::Fails: return "Fails";
        default: return "Undetermined";
    }
}

LaurentFraction build_h(const ProblemSpec& spec) {
    return LaurentFraction(spec.P.conjugate_reflect(), spec.m, spec.n);
}

namespace {

// w1 d/dw1 K - m K and its mirror, the numerators of the partials of h.
BiPoly radial_difference(const BiPoly& K, int var, int deg) {
    return BiPoly::variable(var) * K.derivative(var) - K.scaled(GaussianRational(deg));
}

}  // namespace

BiPoly delta_numerator(const ProblemSpec& spec) {
    BiPoly K = spec.P.conjugate_reflect();
    BiPoly A = spec.P.derivative(1).compose(spec.p1, spec.p2);
    BiPoly B = spec.P.derivative(2).compose(spec.p1, spec.p2);
    BiPoly C1 = radial_difference(K, 1, spec.m).compose(spec.p1, spec.p2);
    BiPoly C2 = radial_difference(K, 2, spec.n).compose(spec.p1, spec.p2);
    BiPoly jac = spec.p1.derivative(1) * spec.p2.derivative(2) -
                 spec.p1.derivative(2) * spec.p2.derivative(1);
    return (A * C2 * spec.p1 - B * C1 * spec.p2) * jac;
}

FactorList factor_delta(const BiPoly& N) {
    if (N.is_zero()) throw DeltaIdenticallyZero();
    return factor_irreducible(N);
}

Cplx boundary_data(const ProblemSpec& spec, const PointPair& z) {
    Cplx w1 = spec.p1.evaluate(z[0], z[1]);
    Cplx w2 = spec.p2.evaluate(z[0], z[1]);
    return std::conj(spec.P.evaluate(w1, w2));
}

Cplx h_psi(const ProblemSpec& spec, const PointPair& z) {
    Cplx w1 = spec.p1.evaluate(z[0], z[1]);
    Cplx w2 = spec.p2.evaluate(z[0], z[1]);
    return build_h(spec).evaluate(w1, w2);
}

Cplx delta_direct(const ProblemSpec& spec, const PointPair& z) {
    BiPoly K = spec.P.conjugate_reflect();
    Cplx w1 = spec.p1.evaluate(z[0], z[1]);
    Cplx w2 = spec.p2.evaluate(z[0], z[1]);
    Cplx a = spec.P.derivative(1).evaluate(w1, w2);
    Cplx b = spec.P.derivative(2).evaluate(w1, w2);
    Cplx dh1 = radial_difference(K, 1, spec.m).evaluate(w1, w2) /
               (std::pow(w1, spec.m + 1) * std::pow(w2, spec.n));
    Cplx dh2 = radial_difference(K, 2, spec.n).evaluate(w1, w2) /
               (std::pow(w1, spec.m) * std::pow(w2, spec.n + 1));
    Cplx jac = (spec.p1.derivative(1) * spec.p2.derivative(2) -
                spec.p1.derivative(2) * spec.p2.derivative(1))
                   .evaluate(z[0], z[1]);
    return (a * dh2 - b * dh1) * jac;
}

std::vector<PointPair> sample_variety(const BiPoly& q, const ProblemSpec& spec,
                                      int count, bool inside_closure, double off_l_margin,
                                      std::mt19937_64& rng) {
    std::vector<PointPair> out;
    if (q.is_constant()) return out;
    int solve_var = q.degree(1) > 0 ? 1 : 2;
    int other = solve_var == 1 ? 2 : 1;
    double radius = inside_closure ? 1.0 : 1.4;
    int attempts = std::max(count, 1) * 50;
    for (int a = 0; a < attempts && static_cast<int>(out.size()) < count; ++a) {
        Cplx w = random_disc(rng, radius);
        std::vector<Cplx> cs = slice_coefficients(q, solve_var, w);
        for (Cplx r : all_roots(cs, rng)) {
            PointPair z = solve_var == 1 ? PointPair{r, w} : PointPair{w, r};
            if (std::abs(q.evaluate(z[0], z[1])) > 1e-11 * (1.0 + std::abs(r))) continue;
            if (inside_closure) {
                Cplx v1 = spec.p1.evaluate(z[0], z[1]);
                Cplx v2 = spec.p2.evaluate(z[0], z[1]);
                if (std::abs(v1) > 1.0 - off_l_margin) continue;
                if (std::abs(v2) > 1.0 - off_l_margin) continue;
                if (std::abs(v1 * v2) < off_l_margin) continue;
            }
            out.push_back(z);
            if (static_cast<int>(out.size()) >= count) break;
        }
    }
    return out;
}

namespace {

// Residuals [Re q, Im q, |p1|^2-1, |p2|^2-1] with the exact Jacobian rows in
// the real coordinates (x1, y1, x2, y2).
bool polish_gamma_point(const BiPoly& q, const ProblemSpec& spec, PointPair& z) {
    BiPoly q1 = q.derivative(1), q2 = q.derivative(2);
    BiPoly p11 = spec.p1.derivative(1), p12 = spec.p1.derivative(2);
    BiPoly p21 = spec.p2.derivative(1), p22 = spec.p2.derivative(2);
    LMProblem prob;
    prob.n = 4;
    prob.m = 4;
    prob.eval = [&](const std::vector<double>& x, std::vector<double>& r,
                    std::vector<double>& J) {
        Cplx z1{x[0], x[1]}, z2{x[2], x[3]};
        Cplx qv = q.evaluate(z1, z2);
        Cplx v1 = spec.p1.evaluate(z1, z2), v2 = spec.p2.evaluate(z1, z2);
        r[0] = qv.real();
        r[1] = qv.imag();
        r[2] = std::norm(v1) - 1.0;
        r[3] = std::norm(v2) - 1.0;
        Cplx a1 = q1.evaluate(z1, z2), a2 = q2.evaluate(z1, z2);
        J[0] = a1.real();
        J[1] = -a1.imag();
        J[2] = a2.real();
        J[3] = -a2.imag();
        J[4] = a1.imag();
        J[5] = a1.real();
        J[6] = a2.imag();
        J[7] = a2.real();
        Cplx c1 = std::conj(v1), c2 = std::conj(v2);
        Cplx w11 = p11.evaluate(z1, z2), w12 = p12.evaluate(z1, z2);
        Cplx w21 = p21.evaluate(z1, z2), w22 = p22.evaluate(z1, z2);
        J[8] = 2.0 * (c1 * w11).real();
        J[9] = -2.0 * (c1 * w11).imag();
        J[10] = 2.0 * (c1 * w12).real();
        J[11] = -2.0 * (c1 * w12).imag();
        J[12] = 2.0 * (c2 * w21).real();
        J[13] = -2.0 * (c2 * w21).imag();
        J[14] = 2.0 * (c2 * w22).real();
        J[15] = -2.0 * (c2 * w22).imag();
    };
    std::vector<double> x{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
    bool ok = levenberg_marquardt(prob, x, 1e-12);
    z = {Cplx{x[0], x[1]}, Cplx{x[2], x[3]}};
    return ok;
}

double gamma_point_residual(const BiPoly& q, const ProblemSpec& spec, const PointPair& z) {
    double qv = std::abs(q.evaluate(z[0], z[1]));
    double l1 = std::abs(std::abs(spec.p1.evaluate(z[0], z[1])) - 1.0);
    double l2 = std::abs(std::abs(spec.p2.evaluate(z[0], z[1])) - 1.0);
    return std::max({qv, l1, l2});
}

GammaIntersection find_gamma_intersection(const BiPoly& q, const ProblemSpec& spec,
                                          std::mt19937_64& rng) {
    GammaIntersection best;
    best.residual = 1e300;
    std::vector<PointPair> starts = sample_variety(q, spec, 48, false, 0.0, rng);
    std::sort(starts.begin(), starts.end(), [&](const PointPair& a, const PointPair& b) {
        auto torus_dist = [&](const PointPair& z) {
            return std::max(std::abs(std::abs(spec.p1.evaluate(z[0], z[1])) - 1.0),
                            std::abs(std::abs(spec.p2.evaluate(z[0], z[1])) - 1.0));
        };
        return torus_dist(a) < torus_dist(b);
    });
    if (starts.size() > 12) starts.resize(12);
    for (PointPair z : starts) {
        polish_gamma_point(q, spec, z);
        double res = gamma_point_residual(q, spec, z);
        if (res < best.residual) {
            best.residual = res;
            best.witness = z;
        }
    }
    best.nonempty = !starts.empty() && best.residual <= spec.tol.numeric_tol;
    return best;
}

struct ConstancyScan {
    enum class State { ExactConstant, NumericConstant, SplitSuspected, NotConstant } state;
    std::optional<GaussianRational> exact_value;
    Cplx numeric_value{};
    int clusters = 0;
};

ConstancyScan scan_constancy(const BiPoly& p_psi, const BiPoly& q, const ProblemSpec& spec,
                             std::mt19937_64& rng) {
    ConstancyScan scan;
    BiPoly rem = p_psi.divmod(q).second;
    if (rem.is_constant()) {
        scan.state = ConstancyScan::State::ExactConstant;
        scan.exact_value = rem.constant_value();
        scan.numeric_value = rem.constant_value().to_complex();
        scan.clusters = 1;
        return scan;
    }

    std::vector<PointPair> pts = sample_variety(q, spec, 32, false, 0.0, rng);
    if (pts.size() < 8) {
        scan.state = ConstancyScan::State::NotConstant;
        return scan;
    }
    std::vector<Cplx> values;
    for (const PointPair& z : pts) values.push_back(p_psi.evaluate(z[0], z[1]));
    std::sort(values.begin(), values.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    double scale = 1.0;
    for (Cplx v : values) scale = std::max(scale, std::abs(v));

    // group values by gaps; tight clusters hint that the factor splits over C
    // into branches with distinct constants
    std::vector<std::vector<Cplx>> groups{{values.front()}};
    for (size_t k = 1; k < values.size(); ++k) {
        if (std::abs(values[k] - groups.back().back()) > 1e-5 * scale)
            groups.push_back({});
        groups.back().push_back(values[k]);
    }
    auto tight = [&](const std::vector<Cplx>& g) {
        if (g.size() < 3) return false;
        double spread = 0;
        for (const Cplx& v : g) spread = std::max(spread, std::abs(v - g.front()));
        return spread <= 1e-7 * scale;
    };
    scan.clusters = static_cast<int>(groups.size());
    if (groups.size() == 1 && tight(groups.front())) {
        scan.state = ConstancyScan::State::NumericConstant;
        Cplx mean{0, 0};
        for (const Cplx& v : groups.front()) mean += v;
        scan.numeric_value = mean / double(groups.front().size());
        return scan;
    }
    if (groups.size() >= 2 && groups.size() <= 8 &&
        std::all_of(groups.begin(), groups.end(), tight)) {
        scan.state = ConstancyScan::State::SplitSuspected;
        return scan;
    }
    scan.state = ConstancyScan::State::NotConstant;
    return scan;
}

}  // namespace

ComponentReport analyze_component(const BiPoly& q, const ProblemSpec& spec) {
    if (q.is_constant()) throw std::invalid_argument("component factor must be non-constant");
    ComponentReport report;
    report.q = q;
    std::mt19937_64 rng(spec.seed ^ std::hash<std::string>{}(q.str()));

    BiPoly p_psi = spec.P.compose(spec.p1, spec.p2);
    ConstancyScan scan = scan_constancy(p_psi, q, spec, rng);

    std::optional<GaussianRational> c;
    switch (scan.state) {
        case ConstancyScan::State::ExactConstant:
            c = scan.exact_value;
            report.p_psi_constant_exact = true;
            report.evidence_mode = EvidenceMode::Exact;
            break;
        case ConstancyScan::State::NumericConstant: {
            report.evidence_mode = EvidenceMode::NumericOnly;
            report.note = "P o Psi numerically constant on samples; exact confirmation failed";
            GaussianRational rounded;
            if (rational_round(scan.numeric_value, 1000000, 1e-9, rounded)) {
                if ((p_psi - BiPoly(rounded)).try_divide(q)) {
                    c = rounded;
                    report.p_psi_constant_exact = true;
                    report.evidence_mode = EvidenceMode::Exact;
                    report.note.clear();
                } else {
                    c = rounded;
                }
            }
            break;
        }
        case ConstancyScan::State::SplitSuspected:
            report.evidence_mode = EvidenceMode::Flagged;
            report.note = "P o Psi takes " + std::to_string(scan.clusters) +
                          " distinct constant values on sampled branches; the factor may "
                          "split further over C, membership undetermined";
            break;
        case ConstancyScan::State::NotConstant:
            report.evidence_mode = EvidenceMode::Exact;
            report.note = "P o Psi is non-constant on the component";
            break;
    }
    report.c_constant = c;

    if (c) {
        BiPoly K_psi = spec.P.conjugate_reflect().compose(spec.p1, spec.p2);
        BiPoly target = K_psi - spec.p1.pow(static_cast<unsigned>(spec.m)) *
                                    spec.p2.pow(static_cast<unsigned>(spec.n)) *
                                    BiPoly(c->conj());
        report.h_psi_matches_exact = target.try_divide(q).has_value();
    }

    report.gamma_intersection = find_gamma_intersection(q, spec, rng);

    std::vector<PointPair> inside =
        sample_variety(q, spec, 64, true, spec.tol.boundary_margin, rng);
    if (!inside.empty()) {
        PointPair z = inside.front();
        report.interior_witness = Witness{z, std::abs(q.evaluate(z[0], z[1]))};
    }

    bool constant_enough = report.p_psi_constant_exact ||
                           scan.state == ConstancyScan::State::NumericConstant;
    report.in_j = constant_enough && report.h_psi_matches_exact &&
                  report.gamma_intersection.nonempty && report.interior_witness.has_value();
    return report;
}

HullReport classify(const ProblemSpec& spec) {
    HullReport report;
    PolyhedronSpec ps{spec.p1, spec.p2};
    report.hypothesis_checks.push_back(check_nondegeneracy(ps, 200, 1e-8, spec.seed));
    report.hypothesis_checks.push_back(check_properness(ps));
    report.hypothesis_checks.push_back(check_contractible_homogeneous(ps));
    report.hypothesis_checks.push_back(leaf_assertion_report());

    report.delta_numerator = delta_numerator(spec);
    report.delta_cross_check = cross_check_delta(spec, 64, spec.seed);

    for (const CheckReport& check : report.hypothesis_checks) {
        if (check.verdict == Verdict::Fail) {
            report.classification = Classification::HypothesisFailure;
            if (!report.hypothesis_failure_reason.empty())
                report.hypothesis_failure_reason += "; ";
            report.hypothesis_failure_reason += check.name + ": " + check.note;
        }
    }
    if (report.classification == Classification::HypothesisFailure) {
        if (!report.delta_numerator.is_zero())
            report.delta_factors = factor_delta(report.delta_numerator);
        report.approximation = decide_approximation(report);
        return report;
    }

    if (report.delta_numerator.is_zero()) {
        report.classification = Classification::DegenerateDeltaZero;
        report.approximation = decide_approximation(report);
        return report;
    }

    report.delta_factors = factor_delta(report.delta_numerator);
    for (const Factor& f : report.delta_factors.factors)
        report.components.push_back(analyze_component(f.poly, spec));

    bool any_uncertain = false;
    for (ComponentReport& comp : report.components) {
        if (comp.in_j && comp.evidence_mode == EvidenceMode::NumericOnly) {
            // never certify membership from floating point alone
            comp.evidence_mode = EvidenceMode::Flagged;
        }
        if (comp.evidence_mode != EvidenceMode::Exact) any_uncertain = true;
        if (comp.in_j) report.hull_pieces.push_back(comp);
    }

    if (!report.hull_pieces.empty()) {
        report.classification = Classification::HullWithVarieties;
    } else if (any_uncertain) {
        report.classification = Classification::HypothesisFailure;
        report.hypothesis_failure_reason =
            "component membership evidence is not exact; classification undetermined";
    } else {
        report.classification = Classification::PolynomiallyConvex;
    }
    report.approximation = decide_approximation(report);
    return report;
}

ApproximationVerdict decide_approximation(const HullReport& report) {
    switch (report.classification) {
        case Classification::PolynomiallyConvex:
            return ApproximationVerdict::Holds;
        case Classification::HullWithVarieties: {
            bool any_certified = false;
            for (const ComponentReport& piece : report.hull_pieces)
                if (piece.evidence_mode != EvidenceMode::Flagged) any_certified = true;
            return any_certified ? ApproximationVerdict::Fails
                                 : ApproximationVerdict::Undetermined;
        }
        default:
            return ApproximationVerdict::Undetermined;
    }
}

// Defined here rather than with the other verification routines so the
// classifier and the standalone cross-check share one implementation.
double cross_check_delta(const ProblemSpec& spec, int trials, std::uint64_t seed) {
    BiPoly N = delta_numerator(spec);
    BiPoly den = spec.p1.pow(static_cast<unsigned>(spec.m + 1)) *
                 spec.p2.pow(static_cast<unsigned>(spec.n + 1));
    std::mt19937_64 rng(seed ^ 0xd6e8feb86659fd93ULL);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        PointPair z;
        for (int guard = 0; guard < 400; ++guard) {
            z = {random_disc(rng, 1.5), random_disc(rng, 1.5)};
            Cplx v = spec.p1.evaluate(z[0], z[1]) * spec.p2.evaluate(z[0], z[1]);
            if (std::abs(v) > 0.1) break;
        }
        Cplx direct = delta_direct(spec, z);
        Cplx exact_route = N.evaluate(z[0], z[1]) / den.evaluate(z[0], z[1]);
        double dev = std::abs(exact_route - direct) / (1.0 + std::abs(direct));
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace polyhull
