#include "polyhull/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <numbers>
#include <stdexcept>

#include "polyhull/unipoly.hpp"

namespace polyhull {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        default: return "Inconclusive";
    }
}

const char* to_string(Method m) {
    return m == Method::Exact ? "Exact" : "Sampled";
}

namespace {

Cplx complex_det(std::vector<std::vector<Cplx>> m) {
    size_t n = m.size();
    Cplx det{1.0, 0.0};
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t r = k + 1; r < n; ++r)
            if (std::abs(m[r][k]) > std::abs(m[piv][k])) piv = r;
        if (std::abs(m[piv][k]) == 0.0) return {0.0, 0.0};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t r = k + 1; r < n; ++r) {
            Cplx f = m[r][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[r][j] -= f * m[k][j];
        }
    }
    return det;
}

// Resultant in `var` of (p1 - t1, p2 - t2) by Sylvester evaluation at scaled
// roots of unity and inverse DFT; robust to leading coefficients vanishing at
// individual nodes.
std::vector<Cplx> fiber_resultant(const PolyhedronSpec& spec, Cplx t1, Cplx t2, int var) {
    int other = var == 1 ? 2 : 1;
    int da = spec.p1.degree(var), db = spec.p2.degree(var);
    if (da < 0 || db < 0) return {};
    int bound = spec.p1.degree(other) * db + spec.p2.degree(other) * da;
    int nodes = std::max(bound + 1, 1);
    double scale = 1.0 + 1.0 / 64.0;

    auto det_at = [&](Cplx w) {
        std::vector<Cplx> ac = slice_coefficients(spec.p1, var, w);
        std::vector<Cplx> bc = slice_coefficients(spec.p2, var, w);
        ac.resize(static_cast<size_t>(da + 1), Cplx{0, 0});
        bc.resize(static_cast<size_t>(db + 1), Cplx{0, 0});
        ac[0] -= t1;
        bc[0] -= t2;
        int n = da + db;
        if (n == 0) return Cplx{1, 0};
        std::vector<std::vector<Cplx>> m(static_cast<size_t>(n),
                                         std::vector<Cplx>(static_cast<size_t>(n), Cplx{0, 0}));
        for (int r = 0; r < db; ++r)
            for (int k = 0; k <= da; ++k) m[r][r + k] = ac[static_cast<size_t>(da - k)];
        for (int r = 0; r < da; ++r)
            for (int k = 0; k <= db; ++k) m[db + r][r + k] = bc[static_cast<size_t>(db - k)];
        return complex_det(std::move(m));
    };

    std::vector<Cplx> values(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        double a = 2.0 * std::numbers::pi * j / nodes;
        values[static_cast<size_t>(j)] = det_at(scale * Cplx{std::cos(a), std::sin(a)});
    }
    std::vector<Cplx> coeffs(static_cast<size_t>(nodes), Cplx{0, 0});
    for (int k = 0; k < nodes; ++k) {
        Cplx acc{0, 0};
        for (int j = 0; j < nodes; ++j) {
            double a = -2.0 * std::numbers::pi * j * k / nodes;
            acc += values[static_cast<size_t>(j)] * Cplx{std::cos(a), std::sin(a)};
        }
        coeffs[static_cast<size_t>(k)] = acc / (static_cast<double>(nodes) * std::pow(scale, k));
    }
    return coeffs;
}

// Newton for p1 = t1, p2 = t2 with the exact Jacobian.
bool newton_to_targets(const PolyhedronSpec& spec, Cplx t1, Cplx t2, PointPair& z) {
    BiPoly j11 = spec.p1.derivative(1), j12 = spec.p1.derivative(2);
    BiPoly j21 = spec.p2.derivative(1), j22 = spec.p2.derivative(2);
    for (int it = 0; it < 60; ++it) {
        Cplx v1 = spec.p1.evaluate(z[0], z[1]) - t1;
        Cplx v2 = spec.p2.evaluate(z[0], z[1]) - t2;
        if (std::max(std::abs(v1), std::abs(v2)) < 1e-13) return true;
        Cplx a = j11.evaluate(z[0], z[1]), b = j12.evaluate(z[0], z[1]);
        Cplx c = j21.evaluate(z[0], z[1]), d = j22.evaluate(z[0], z[1]);
        Cplx det = a * d - b * c;
        if (std::abs(det) < 1e-300) return false;
        z[0] -= (d * v1 - b * v2) / det;
        z[1] -= (a * v2 - c * v1) / det;
    }
    Cplx v1 = spec.p1.evaluate(z[0], z[1]) - t1;
    Cplx v2 = spec.p2.evaluate(z[0], z[1]) - t2;
    return std::max(std::abs(v1), std::abs(v2)) < 1e-10;
}

double fiber_residual(const PolyhedronSpec& spec, Cplx t1, Cplx t2, const PointPair& z) {
    return std::max(std::abs(spec.p1.evaluate(z[0], z[1]) - t1),
                    std::abs(spec.p2.evaluate(z[0], z[1]) - t2));
}

std::uint64_t mix_seed(std::uint64_t seed, double a, double b) {
    auto h = [](std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    };
    std::uint64_t ua, ub;
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    std::memcpy(&ua, &a, sizeof ua);
    std::memcpy(&ub, &b, sizeof ub);
    return h(seed ^ h(ua) ^ (h(ub) << 1));
}

// Keeps `var`: eliminates the other variable, so the resultant roots are the
// `var` coordinates of the fiber.
bool solve_fiber_once(const PolyhedronSpec& spec, Cplx t1, Cplx t2, int var,
                      std::mt19937_64& rng, std::vector<PointPair>& out) {
    int other = var == 1 ? 2 : 1;
    std::vector<Cplx> R = trim_leading(fiber_resultant(spec, t1, t2, other));
    if (R.size() <= 1) return false;
    std::vector<Cplx> primary = all_roots(R, rng);
    for (Cplx a : primary) {
        // candidate values of the other coordinate from both slice equations
        std::vector<Cplx> cands;
        std::vector<Cplx> s1 = slice_coefficients(spec.p1, other, a);
        if (!s1.empty()) s1[0] -= t1;
        std::vector<Cplx> s2 = slice_coefficients(spec.p2, other, a);
        if (!s2.empty()) s2[0] -= t2;
        for (Cplx b : all_roots(s1, rng)) cands.push_back(b);
        for (Cplx b : all_roots(s2, rng)) cands.push_back(b);
        for (Cplx b : cands) {
            PointPair z = var == 1 ? PointPair{a, b} : PointPair{b, a};
            if (fiber_residual(spec, t1, t2, z) > 1e-2 * (1.0 + std::abs(a) + std::abs(b)))
                continue;
            if (!newton_to_targets(spec, t1, t2, z)) continue;
            if (fiber_residual(spec, t1, t2, z) > 1e-10) continue;
            bool dup = false;
            for (const PointPair& w : out) {
                if (std::abs(w[0] - z[0]) + std::abs(w[1] - z[1]) <
                    1e-7 * (1.0 + std::abs(z[0]) + std::abs(z[1]))) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(z);
        }
    }
    return true;
}

bool is_homogeneous(const BiPoly& f) {
    if (f.is_zero()) return false;
    int d = f.total_degree();
    for (const auto& [e, c] : f.terms())
        if (e.total() != d) return false;
    return true;
}

// Common zero of a homogeneous pair away from the origin: a root of the GCD
// on the affine line z1 = 1, or the point (0, 1) when both top coefficients
// in z2 vanish.
std::optional<PointPair> homogeneous_common_zero(const BiPoly& f, const BiPoly& g) {
    UniPoly u1 = substitute_other(f, 2, GaussianRational(1));
    UniPoly u2 = substitute_other(g, 2, GaussianRational(1));
    UniPoly common = gcd(u1, u2);
    if (common.degree() > 0) {
        std::mt19937_64 rng(17);
        std::vector<Cplx> cs;
        for (const GaussianRational& c : common.coeffs()) cs.push_back(c.to_complex());
        auto roots = all_roots(cs, rng);
        if (!roots.empty()) return PointPair{Cplx{1, 0}, roots.front()};
        return PointPair{Cplx{1, 0}, Cplx{0, 0}};
    }
    GaussianRational top1 = f.coefficient({0, f.total_degree()});
    GaussianRational top2 = g.coefficient({0, g.total_degree()});
    if (top1.is_zero() && top2.is_zero()) return PointPair{Cplx{0, 0}, Cplx{1, 0}};
    return std::nullopt;
}

// Power-substitution shape: p = a z1^s + b z2^t + c.
struct PowerForm {
    GaussianRational a, b, c;
    int s = 0, t = 0;
    bool ok = false;
};

PowerForm power_form(const BiPoly& f) {
    PowerForm out;
    for (const auto& [e, coeff] : f.terms()) {
        if (e.e1 > 0 && e.e2 > 0) return out;
        if (e.e1 > 0) {
            if (out.s != 0 && out.s != e.e1) return out;
            out.s = e.e1;
            out.a = coeff;
        } else if (e.e2 > 0) {
            if (out.t != 0 && out.t != e.e2) return out;
            out.t = e.e2;
            out.b = coeff;
        } else {
            out.c = coeff;
        }
    }
    out.ok = true;
    return out;
}

BiPoly top_form(const BiPoly& f) {
    BiPoly out;
    int d = f.total_degree();
    for (const auto& [e, c] : f.terms())
        if (e.total() == d) out += BiPoly::monomial(e, c);
    return out;
}

// ---- gradient zero candidates on a modulus level set ----

struct GradOutcome {
    Verdict verdict = Verdict::Pass;
    Method method = Method::Exact;
    std::vector<Witness> witnesses;
    std::string note;
    std::optional<double> observed_min;
};

// Levenberg-Marquardt residuals for "gradient zero on |p| = 1": real and
// imaginary parts of both partials plus the level-set equation.
bool polish_gradient_zero(const BiPoly& p, PointPair& z) {
    BiPoly g1 = p.derivative(1), g2 = p.derivative(2);
    BiPoly g11 = g1.derivative(1), g12 = g1.derivative(2);
    BiPoly g21 = g2.derivative(1), g22 = g2.derivative(2);
    BiPoly d1 = p.derivative(1), d2 = p.derivative(2);
    LMProblem prob;
    prob.n = 4;
    prob.m = 5;
    prob.eval = [&](const std::vector<double>& x, std::vector<double>& r,
                    std::vector<double>& J) {
        Cplx z1{x[0], x[1]}, z2{x[2], x[3]};
        Cplx v1 = g1.evaluate(z1, z2), v2 = g2.evaluate(z1, z2);
        Cplx pv = p.evaluate(z1, z2);
        r[0] = v1.real();
        r[1] = v1.imag();
        r[2] = v2.real();
        r[3] = v2.imag();
        r[4] = std::norm(pv) - 1.0;
        Cplx a11 = g11.evaluate(z1, z2), a12 = g12.evaluate(z1, z2);
        Cplx a21 = g21.evaluate(z1, z2), a22 = g22.evaluate(z1, z2);
        Cplx q1 = d1.evaluate(z1, z2), q2 = d2.evaluate(z1, z2);
        auto holo_row = [&](double* row, Cplx w1, Cplx w2, bool imag_part) {
            if (!imag_part) {
                row[0] = w1.real();
                row[1] = -w1.imag();
                row[2] = w2.real();
                row[3] = -w2.imag();
            } else {
                row[0] = w1.imag();
                row[1] = w1.real();
                row[2] = w2.imag();
                row[3] = w2.real();
            }
        };
        holo_row(&J[0], a11, a12, false);
        holo_row(&J[4], a11, a12, true);
        holo_row(&J[8], a21, a22, false);
        holo_row(&J[12], a21, a22, true);
        Cplx cb = std::conj(pv);
        J[16] = 2.0 * (cb * q1).real();
        J[17] = -2.0 * (cb * q1).imag();
        J[18] = 2.0 * (cb * q2).real();
        J[19] = -2.0 * (cb * q2).imag();
    };
    std::vector<double> x{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
    bool ok = levenberg_marquardt(prob, x, 1e-9);
    z = {Cplx{x[0], x[1]}, Cplx{x[2], x[3]}};
    return ok;
}

double gradient_level_residual(const BiPoly& p, const PointPair& z) {
    Cplx v1 = p.derivative(1).evaluate(z[0], z[1]);
    Cplx v2 = p.derivative(2).evaluate(z[0], z[1]);
    double level = std::abs(std::norm(p.evaluate(z[0], z[1])) - 1.0);
    return std::max({std::abs(v1), std::abs(v2), level});
}

GradOutcome gradient_subcheck(const BiPoly& p, std::uint64_t seed) {
    GradOutcome out;
    BiPoly g1 = p.derivative(1), g2 = p.derivative(2);
    if ((g1.is_constant() && !g1.is_zero()) || (g2.is_constant() && !g2.is_zero())) {
        out.note = "a first partial is a nonzero constant";
        return out;
    }
    std::mt19937_64 rng(seed);

    auto finite_candidates = [&](const std::vector<PointPair>& cands) {
        for (PointPair z : cands) {
            if (!newton2(g1, g2, z, 1e-13)) continue;
            double level = std::abs(std::norm(p.evaluate(z[0], z[1])) - 1.0);
            if (level <= 1e-8) {
                out.verdict = Verdict::Fail;
                out.witnesses.push_back({z, gradient_level_residual(p, z)});
            }
        }
        if (out.verdict == Verdict::Pass)
            out.note = "finitely many gradient zeros, none on the level set";
        else
            out.note = "gradient zero on the level set";
    };

    if (g1.is_zero() || g2.is_zero()) {
        // p depends on a single variable; gradient zeros form vertical or
        // horizontal lines through the roots of the nontrivial partial
        const BiPoly& g = g1.is_zero() ? g2 : g1;
        int var = g1.is_zero() ? 2 : 1;
        std::vector<Cplx> cs = slice_coefficients(g, var, Cplx{0, 0});
        std::vector<PointPair> cands;
        for (Cplx r : all_roots(cs, rng))
            cands.push_back(var == 1 ? PointPair{r, Cplx{0, 0}} : PointPair{Cplx{0, 0}, r});
        for (const PointPair& z : cands) {
            double level = std::abs(std::norm(p.evaluate(z[0], z[1])) - 1.0);
            if (level <= 1e-8) {
                out.verdict = Verdict::Fail;
                out.witnesses.push_back({z, gradient_level_residual(p, z)});
            }
        }
        out.note = out.verdict == Verdict::Pass
                       ? "single-variable gradient roots avoid the level set"
                       : "gradient zero on the level set";
        return out;
    }

    BiPoly common = gcd(g1, g2);
    if (common.is_constant()) {
        BiPoly res2 = resultant(g1, g2, 2);
        std::vector<PointPair> cands;
        if (!res2.is_zero() && !res2.is_constant()) {
            std::vector<Cplx> cs = slice_coefficients(res2, 1, Cplx{0, 0});
            for (Cplx a : all_roots(cs, rng)) {
                std::vector<Cplx> s1 = slice_coefficients(g1, 2, a);
                std::vector<Cplx> s2 = slice_coefficients(g2, 2, a);
                for (Cplx b : all_roots(s1, rng)) cands.push_back({a, b});
                for (Cplx b : all_roots(s2, rng)) cands.push_back({a, b});
            }
        }
        finite_candidates(cands);
        return out;
    }

    // common curve of gradient zeros: fall back to a sampled scan of the
    // level set with local refinement
    out.method = Method::Sampled;
    double best = 1e300;
    PointPair best_z{Cplx{0, 0}, Cplx{0, 0}};
    int free_var = p.degree(1) > 0 ? 2 : 1;
    int solve_var = free_var == 2 ? 1 : 2;
    for (int j = 0; j < 24; ++j) {
        double theta = 2.0 * std::numbers::pi * j / 24;
        Cplx target{std::cos(theta), std::sin(theta)};
        for (int k = 0; k < 12; ++k) {
            Cplx w = random_disc(rng, 1.5);
            std::vector<Cplx> cs = slice_coefficients(p, solve_var, w);
            if (!cs.empty()) cs[0] -= target;
            for (Cplx r : all_roots(cs, rng)) {
                PointPair z = solve_var == 1 ? PointPair{r, w} : PointPair{w, r};
                double g = std::hypot(std::abs(g1.evaluate(z[0], z[1])),
                                      std::abs(g2.evaluate(z[0], z[1])));
                if (g < best) {
                    best = g;
                    best_z = z;
                }
            }
        }
    }
    if (best < 1e300) {
        PointPair z = best_z;
        if (polish_gradient_zero(p, z) && gradient_level_residual(p, z) <= 1e-8) {
            out.verdict = Verdict::Fail;
            out.witnesses.push_back({z, gradient_level_residual(p, z)});
            out.note = "gradient zero on the level set";
            return out;
        }
        out.observed_min = best;
    }
    out.note = "sampled scan over the level set";
    return out;
}

// LM residuals for "W = 0 on Gamma".
bool polish_wedge_zero(const PolyhedronSpec& spec, const BiPoly& W, PointPair& z) {
    BiPoly w1 = W.derivative(1), w2 = W.derivative(2);
    BiPoly p11 = spec.p1.derivative(1), p12 = spec.p1.derivative(2);
    BiPoly p21 = spec.p2.derivative(1), p22 = spec.p2.derivative(2);
    LMProblem prob;
    prob.n = 4;
    prob.m = 4;
    prob.eval = [&](const std::vector<double>& x, std::vector<double>& r,
                    std::vector<double>& J) {
        Cplx z1{x[0], x[1]}, z2{x[2], x[3]};
        Cplx wv = W.evaluate(z1, z2);
        Cplx v1 = spec.p1.evaluate(z1, z2), v2 = spec.p2.evaluate(z1, z2);
        r[0] = wv.real();
        r[1] = wv.imag();
        r[2] = std::norm(v1) - 1.0;
        r[3] = std::norm(v2) - 1.0;
        Cplx a1 = w1.evaluate(z1, z2), a2 = w2.evaluate(z1, z2);
        J[0] = a1.real();
        J[1] = -a1.imag();
        J[2] = a2.real();
        J[3] = -a2.imag();
        J[4] = a1.imag();
        J[5] = a1.real();
        J[6] = a2.imag();
        J[7] = a2.real();
        Cplx c1 = std::conj(v1), c2 = std::conj(v2);
        Cplx q11 = p11.evaluate(z1, z2), q12 = p12.evaluate(z1, z2);
        Cplx q21 = p21.evaluate(z1, z2), q22 = p22.evaluate(z1, z2);
        J[8] = 2.0 * (c1 * q11).real();
        J[9] = -2.0 * (c1 * q11).imag();
        J[10] = 2.0 * (c1 * q12).real();
        J[11] = -2.0 * (c1 * q12).imag();
        J[12] = 2.0 * (c2 * q21).real();
        J[13] = -2.0 * (c2 * q21).imag();
        J[14] = 2.0 * (c2 * q22).real();
        J[15] = -2.0 * (c2 * q22).imag();
    };
    std::vector<double> x{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
    bool ok = levenberg_marquardt(prob, x, 1e-9);
    z = {Cplx{x[0], x[1]}, Cplx{x[2], x[3]}};
    return ok;
}

double wedge_gamma_residual(const PolyhedronSpec& spec, const BiPoly& W, const PointPair& z) {
    double wv = std::abs(W.evaluate(z[0], z[1]));
    double l1 = std::abs(std::norm(spec.p1.evaluate(z[0], z[1])) - 1.0);
    double l2 = std::abs(std::norm(spec.p2.evaluate(z[0], z[1])) - 1.0);
    return std::max({wv, l1, l2});
}

}  // namespace

CheckReport check_nondegeneracy(const PolyhedronSpec& spec, int samples, double tol,
                                std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    CheckReport report;
    report.name = "non-degeneracy";

    GradOutcome a = gradient_subcheck(spec.p1, seed ^ 0x9e3779b97f4a7c15ULL);
    GradOutcome b = gradient_subcheck(spec.p2, seed ^ 0xc2b2ae3d27d4eb4fULL);

    BiPoly W = spec.p1.derivative(1) * spec.p2.derivative(2) -
               spec.p1.derivative(2) * spec.p2.derivative(1);

    Verdict wedge_verdict = Verdict::Pass;
    Method wedge_method = Method::Exact;
    std::vector<Witness> wedge_witnesses;
    std::optional<double> wedge_min;
    std::string wedge_note;

    if (W.is_zero()) {
        wedge_verdict = Verdict::Fail;
        wedge_note = "Jacobian wedge vanishes identically";
        GammaCloud cloud = sample_gamma(spec, 4, 4, seed);
        if (!cloud.points.empty()) wedge_witnesses.push_back({cloud.points.front(), 0.0});
    } else if (W.is_constant()) {
        wedge_note = "Jacobian wedge is a nonzero constant";
    } else {
        wedge_method = Method::Sampled;
        int grid = std::clamp(static_cast<int>(std::lround(std::sqrt(double(samples)))), 4, 64);
        GammaCloud cloud = sample_gamma(spec, grid, grid, seed);
        if (cloud.points.empty())
            throw SamplingFailed("no boundary points solved for the wedge scan");
        double best = 1e300;
        PointPair best_z{Cplx{0, 0}, Cplx{0, 0}};
        for (const PointPair& z : cloud.points) {
            double v = std::abs(W.evaluate(z[0], z[1]));
            if (v < best) {
                best = v;
                best_z = z;
            }
        }
        PointPair z = best_z;
        if (polish_wedge_zero(spec, W, z) && wedge_gamma_residual(spec, W, z) <= tol) {
            wedge_verdict = Verdict::Fail;
            wedge_witnesses.push_back({z, wedge_gamma_residual(spec, W, z)});
            wedge_note = "wedge zero on the distinguished boundary";
        } else {
            wedge_min = best;
            wedge_note = "wedge scan over sampled boundary";
        }
    }

    report.verdict = Verdict::Pass;
    for (Verdict v : {a.verdict, b.verdict, wedge_verdict}) {
        if (v == Verdict::Fail) report.verdict = Verdict::Fail;
    }
    report.method = (a.method == Method::Exact && b.method == Method::Exact &&
                     wedge_method == Method::Exact)
                        ? Method::Exact
                        : Method::Sampled;
    for (const Witness& w : a.witnesses) report.witnesses.push_back(w);
    for (const Witness& w : b.witnesses) report.witnesses.push_back(w);
    for (const Witness& w : wedge_witnesses) report.witnesses.push_back(w);
    report.note = "grad p1: " + a.note + "; grad p2: " + b.note + "; wedge: " + wedge_note;
    if (wedge_min) report.observed_min = wedge_min;
    else if (a.observed_min || b.observed_min)
        report.observed_min = std::min(a.observed_min.value_or(1e300),
                                       b.observed_min.value_or(1e300));
    return report;
}

CheckReport check_properness(const PolyhedronSpec& spec) {
    CheckReport report;
    report.name = "properness";
    report.method = Method::Exact;

    if (is_homogeneous(spec.p1) && is_homogeneous(spec.p2)) {
        auto zero = homogeneous_common_zero(spec.p1, spec.p2);
        if (zero) {
            report.verdict = Verdict::Fail;
            report.witnesses.push_back(
                {*zero, std::abs(spec.p1.evaluate((*zero)[0], (*zero)[1])) +
                            std::abs(spec.p2.evaluate((*zero)[0], (*zero)[1]))});
            report.note = "homogeneous pair with a common zero away from the origin";
        } else {
            report.verdict = Verdict::Pass;
            report.note = "homogeneous pair; the only common zero is the origin";
        }
        return report;
    }

    PowerForm f1 = power_form(spec.p1), f2 = power_form(spec.p2);
    if (f1.ok && f2.ok && f1.s == f2.s && f1.t == f2.t && f1.s >= 1 && f1.t >= 1) {
        GaussianRational det = f1.a * f2.b - f2.a * f1.b;
        if (!det.is_zero()) {
            report.verdict = Verdict::Pass;
            report.note = "composition of the power map with an affine automorphism";
            return report;
        }
    }

    BiPoly t1 = top_form(spec.p1), t2 = top_form(spec.p2);
    if (!homogeneous_common_zero(t1, t2)) {
        report.verdict = Verdict::Pass;
        report.note = "top-degree forms share no zero away from the origin";
        return report;
    }

    // heuristic radial growth scan, reported but never conclusive
    report.verdict = Verdict::Inconclusive;
    report.method = Method::Sampled;
    std::mt19937_64 rng(1);
    double inner = 1e300, outer = 1e300;
    for (int k = 0; k < 64; ++k) {
        Cplx u = random_disc(rng, 1.0), v = random_disc(rng, 1.0);
        double n = std::sqrt(std::norm(u) + std::norm(v));
        if (n < 1e-6) continue;
        u /= n;
        v /= n;
        auto radial = [&](double R) {
            return std::max(std::abs(spec.p1.evaluate(R * u, R * v)),
                            std::abs(spec.p2.evaluate(R * u, R * v)));
        };
        inner = std::min(inner, radial(4.0));
        outer = std::min(outer, radial(16.0));
    }
    report.note = outer > 4.0 * inner
                      ? "no exact criterion applies; sampled radial growth is consistent with a proper map"
                      : "no exact criterion applies; sampled radial growth is weak";
    return report;
}

CheckReport check_contractible_homogeneous(const PolyhedronSpec& spec) {
    CheckReport report;
    report.name = "contractibility";
    if (is_homogeneous(spec.p1) && is_homogeneous(spec.p2)) {
        report.verdict = Verdict::Pass;
        report.method = Method::Exact;
        report.note = "homogeneous defining pair: the polyhedron is star-shaped about the "
                      "origin, and its closure is compact when the pair is proper";
    } else {
        report.verdict = Verdict::Inconclusive;
        report.method = Method::Exact;
        report.note = "contractibility is certified only for homogeneous pairs";
    }
    return report;
}

CheckReport leaf_assertion_report() {
    CheckReport report;
    report.name = "leaf simple-connectedness";
    report.verdict = Verdict::Inconclusive;
    report.method = Method::Exact;
    report.note = "simple-connectedness of the level-set leaves is recorded as an "
                  "unverified user assertion; no algorithmic test is performed";
    return report;
}

TorusFiber solve_fiber(const PolyhedronSpec& spec, double theta, double phi,
                       std::uint64_t seed) {
    TorusFiber fiber;
    fiber.theta = theta;
    fiber.phi = phi;
    Cplx t1{std::cos(theta), std::sin(theta)};
    Cplx t2{std::cos(phi), std::sin(phi)};
    std::mt19937_64 rng(mix_seed(seed, theta, phi));

    std::vector<PointPair> roots;
    bool usable = solve_fiber_once(spec, t1, t2, 1, rng, roots);
    if (roots.empty()) {
        bool swapped = solve_fiber_once(spec, t1, t2, 2, rng, roots);
        usable = usable || swapped;
    }
    if (!usable) throw ResultantDegenerate();
    if (roots.empty()) throw NoConvergence();

    std::sort(roots.begin(), roots.end(), [](const PointPair& a, const PointPair& b) {
        auto key = [](const PointPair& z) {
            return std::array<double, 4>{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
        };
        return key(a) < key(b);
    });
    fiber.roots = std::move(roots);
    for (const PointPair& z : fiber.roots)
        fiber.residuals.push_back(fiber_residual(spec, t1, t2, z));
    return fiber;
}

GammaCloud sample_gamma(const PolyhedronSpec& spec, int grid_theta, int grid_phi,
                        std::uint64_t seed) {
    if (grid_theta < 1 || grid_phi < 1) throw std::invalid_argument("grid sizes must be >= 1");
    GammaCloud cloud;
    for (int j = 0; j < grid_theta; ++j) {
        double theta = 2.0 * std::numbers::pi * j / grid_theta;
        for (int k = 0; k < grid_phi; ++k) {
            double phi = 2.0 * std::numbers::pi * k / grid_phi;
            try {
                TorusFiber fiber = solve_fiber(spec, theta, phi, seed);
                for (size_t r = 0; r < fiber.roots.size(); ++r) {
                    if (fiber.residuals[r] > 1e-8) {
                        ++cloud.dropped;
                        continue;
                    }
                    cloud.points.push_back(fiber.roots[r]);
                    cloud.thetas.push_back(theta);
                    cloud.phis.push_back(phi);
                    cloud.residuals.push_back(fiber.residuals[r]);
                }
            } catch (const std::runtime_error&) {
                ++cloud.failed_fibers;
            }
        }
    }
    return cloud;
}

void write_gamma_csv(std::ostream& os, const GammaCloud& cloud) {
    os << "re_z1,im_z1,re_z2,im_z2,theta,phi,residual\n";
    os << std::setprecision(17);
    for (size_t k = 0; k < cloud.points.size(); ++k) {
        const PointPair& z = cloud.points[k];
        os << z[0].real() << ',' << z[0].imag() << ',' << z[1].real() << ',' << z[1].imag()
           << ',' << cloud.thetas[k] << ',' << cloud.phis[k] << ',' << cloud.residuals[k]
           << '\n';
    }
}

}  // namespace polyhull
