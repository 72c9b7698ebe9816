#include "polyhull/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "polyhull/numeric.hpp"

namespace polyhull {

BiPoly FactorList::reconstruct() const {
    BiPoly acc{unit};
    for (const Factor& f : factors) acc *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return acc;
}

int factorization_degree_cap() {
    if (const char* env = std::getenv("POLYHULL_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 16;
}

namespace {

// ---- Gaussian integers (used to scale candidates to integer coefficients) ----

struct GInt {
    mpz_class a, b;  // a + b*i
    bool is_zero() const { return a == 0 && b == 0; }
};

GInt gi_mul(const GInt& x, const GInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

GInt gi_sub(const GInt& x, const GInt& y) { return {x.a - y.a, x.b - y.b}; }

mpz_class round_quotient(const mpz_class& p, const mpz_class& d) {
    // nearest integer to p/d, half away from zero is fine here
    mpz_class two_p = 2 * p;
    mpz_class q;
    if (d > 0) {
        mpz_fdiv_q(q.get_mpz_t(), mpz_class(two_p + d).get_mpz_t(), mpz_class(2 * d).get_mpz_t());
    } else {
        mpz_fdiv_q(q.get_mpz_t(), mpz_class(two_p + (-d)).get_mpz_t(),
                   mpz_class(-2 * d).get_mpz_t());
        q = -q;
    }
    return q;
}

GInt gi_div_round(const GInt& x, const GInt& y) {
    mpz_class n = y.a * y.a + y.b * y.b;
    mpz_class p = x.a * y.a + x.b * y.b;
    mpz_class q = x.b * y.a - x.a * y.b;
    return {round_quotient(p, n), round_quotient(q, n)};
}

GInt gi_gcd(GInt x, GInt y) {
    while (!y.is_zero()) {
        GInt r = gi_sub(x, gi_mul(gi_div_round(x, y), y));
        x = y;
        y = r;
    }
    return x;
}

// ---- Univariate splitting of a monic square-free polynomial ----

// Leading coefficient of the primitive integer form of f: the smallest
// Gaussian integer lambda with lambda * (monic f) having Gaussian integer
// coefficients.
GaussianRational integer_scale(const UniPoly& f) {
    mpz_class L(1);
    for (const GaussianRational& c : f.coeffs()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), L.get_mpz_t(), c.real().get_den().get_mpz_t());
        mpz_lcm(L.get_mpz_t(), l.get_mpz_t(), c.imag().get_den().get_mpz_t());
    }
    GInt content{0, 0};
    for (const GaussianRational& c : f.coeffs()) {
        mpq_class re = c.real() * L, im = c.imag() * L;
        content = gi_gcd(content, GInt{re.get_num(), im.get_num()});
    }
    GaussianRational lam(mpq_class(L), mpq_class(0));
    return lam / GaussianRational(mpq_class(content.a), mpq_class(content.b));
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Monic irreducible factors of a monic square-free univariate polynomial.
// Numeric roots drive the search; every accepted factor is verified by exact
// division, so wrong factors are impossible (an undetected true split would
// only leave a coarser, still exact, factorization).
std::vector<UniPoly> split_squarefree(const UniPoly& input) {
    std::vector<UniPoly> out;
    if (input.degree() <= 0) return out;
    if (input.degree() == 1) {
        out.push_back(input.monic());
        return out;
    }

    std::mt19937_64 rng(0x5eed0f5eedULL);
    std::vector<Cplx> coeffs;
    coeffs.reserve(input.coeffs().size());
    for (const GaussianRational& c : input.coeffs()) coeffs.push_back(c.to_complex());
    std::vector<Cplx> roots = all_roots(coeffs, rng);

    UniPoly rem = input.monic();
    std::vector<int> active(roots.size());
    std::iota(active.begin(), active.end(), 0);

    bool progress = true;
    while (progress) {
        progress = false;
        int n = static_cast<int>(active.size());
        if (n <= 1) break;
        GaussianRational lam = integer_scale(rem);
        Cplx lamc = lam.to_complex();
        for (int size = 1; 2 * size <= n && !progress; ++size) {
            std::vector<int> comb = first_combination(size);
            do {
                // monic polynomial with the chosen roots
                std::vector<Cplx> cand{Cplx{1.0, 0.0}};
                for (int pos : comb) {
                    Cplx r = roots[static_cast<size_t>(active[static_cast<size_t>(pos)])];
                    std::vector<Cplx> next(cand.size() + 1, Cplx{0.0, 0.0});
                    for (size_t k = 0; k < cand.size(); ++k) {
                        next[k + 1] += cand[k];
                        next[k] -= cand[k] * r;
                    }
                    cand = std::move(next);
                }
                // scale by lambda and round to Gaussian integers
                std::vector<GaussianRational> rounded(cand.size());
                bool ok = true;
                for (size_t k = 0; k + 1 < cand.size() && ok; ++k) {
                    Cplx v = cand[k] * lamc;
                    double re = std::round(v.real()), im = std::round(v.imag());
                    if (std::abs(v.real() - re) > 0.1 || std::abs(v.imag() - im) > 0.1 ||
                        std::abs(re) > 9e15 || std::abs(im) > 9e15) {
                        ok = false;
                        break;
                    }
                    rounded[k] = GaussianRational(
                        mpq_class(static_cast<long>(std::llround(re))),
                        mpq_class(static_cast<long>(std::llround(im))));
                }
                if (!ok) continue;
                rounded.back() = lam;
                UniPoly candidate = UniPoly(std::move(rounded)).monic();
                if (candidate.degree() != size) continue;
                auto [q, r] = rem.divmod(candidate);
                if (!r.is_zero()) continue;
                out.push_back(candidate);
                rem = q;
                std::vector<int> keep;
                for (int pos = 0; pos < n; ++pos) {
                    if (std::find(comb.begin(), comb.end(), pos) == comb.end())
                        keep.push_back(active[static_cast<size_t>(pos)]);
                }
                active = std::move(keep);
                progress = true;
                break;
            } while (next_combination(comb, n));
        }
    }
    if (rem.degree() >= 1) out.push_back(rem.monic());
    return out;
}

bool unipoly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        int c = a.coeff(k).compare(b.coeff(k));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() <= 0) return out;

    // powers of x
    int low = 0;
    while (f.coeff(low).is_zero()) ++low;
    std::vector<GaussianRational> rest(f.coeffs().begin() + low, f.coeffs().end());
    UniPoly g = UniPoly(std::move(rest)).monic();
    if (low > 0) out.emplace_back(UniPoly::x(), low);

    // Yun square-free decomposition of the monic part
    if (g.degree() >= 1) {
        UniPoly d = g.derivative();
        UniPoly a = gcd(g, d);
        UniPoly b = g.divmod(a).first;
        UniPoly c = d.divmod(a).first - b.derivative();
        int mult = 1;
        while (b.degree() > 0) {
            UniPoly s = gcd(b, c);
            if (s.degree() > 0) {
                for (const UniPoly& q : split_squarefree(s)) out.emplace_back(q, mult);
            }
            b = b.divmod(s).first;
            c = c.divmod(s).first - b.derivative();
            ++mult;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return unipoly_less(x.first, y.first); });
    return out;
}

namespace {

// ---- Bivariate machinery ----

// View f as a polynomial in `var`; content is the monic GCD in the other
// variable of the coefficient polynomials.
BiPoly coefficient_content(const BiPoly& f, int var) {
    BiPoly content;
    for (const BiPoly& row : coefficients_in(f, var)) {
        if (row.is_zero()) continue;
        content = content.is_zero() ? row.monic() : gcd(content, row);
        if (content.is_constant()) break;
    }
    return content.is_zero() ? BiPoly(GaussianRational(1)) : content;
}

UniPoly univariate_view(const BiPoly& f, int var) {
    std::vector<GaussianRational> cs(static_cast<size_t>(std::max(f.degree(var), -1) + 1),
                                     GaussianRational(0));
    for (const auto& [e, c] : f.terms()) {
        int other = var == 1 ? e.e2 : e.e1;
        if (other != 0) throw std::logic_error("polynomial is not univariate");
        cs[static_cast<size_t>(var == 1 ? e.e1 : e.e2)] = c;
    }
    return UniPoly(std::move(cs));
}

// Truncated power series in t with polynomial coefficients in x.
using Series = std::vector<UniPoly>;

Series series_mul(const Series& a, const Series& b, int K) {
    Series out(static_cast<size_t>(K));
    for (int i = 0; i < K; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j < K; ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(i + j)] +=
                a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
    }
    return out;
}

// f(x, t + c) laid out by powers of t.
Series shifted_series(const BiPoly& f, const GaussianRational& c, int K) {
    Series out(static_cast<size_t>(K));
    int dy = f.degree(2);
    // Pascal triangle rows for binomial coefficients
    std::vector<std::vector<mpz_class>> binom(static_cast<size_t>(dy + 1));
    for (int n = 0; n <= dy; ++n) {
        binom[static_cast<size_t>(n)].resize(static_cast<size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k)
            binom[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    std::vector<GaussianRational> cpow(static_cast<size_t>(dy + 1), GaussianRational(1));
    for (int k = 1; k <= dy; ++k) cpow[static_cast<size_t>(k)] = cpow[static_cast<size_t>(k - 1)] * c;
    for (const auto& [e, coeff] : f.terms()) {
        for (int j = 0; j <= e.e2 && j < K; ++j) {
            GaussianRational w = coeff *
                GaussianRational(mpq_class(binom[static_cast<size_t>(e.e2)][static_cast<size_t>(j)])) *
                cpow[static_cast<size_t>(e.e2 - j)];
            out[static_cast<size_t>(j)] += UniPoly(w).shifted(e.e1);
        }
    }
    return out;
}

BiPoly unshift_series(const Series& s, const GaussianRational& c) {
    BiPoly t_poly = BiPoly::variable(2) - BiPoly(c);
    BiPoly acc;
    for (auto it = s.rbegin(); it != s.rend(); ++it) acc = acc * t_poly + it->to_bipoly(1);
    return acc;
}

// Irreducible factors of a square-free bivariate polynomial that is
// primitive as a polynomial in var1 (every factor involves var1).
std::vector<BiPoly> split_bivariate(const BiPoly& s) {
    std::vector<BiPoly> out;
    int d = s.degree(1);
    if (d == 0) throw std::logic_error("split_bivariate needs positive degree in var1");
    if (d == 1) {
        out.push_back(s.monic());
        return out;
    }

    // generic vertical line: leading coefficient alive, image square-free
    BiPoly lead = coefficients_in(s, 1).back();
    GaussianRational c;
    UniPoly image;
    bool found_line = false;
    for (int step = 0; step <= 80 && !found_line; ++step) {
        long v = (step + 1) / 2 * (step % 2 == 1 ? 1 : -1);
        GaussianRational cand{mpq_class(v), mpq_class(0)};
        if (univariate_view(lead, 2).evaluate(cand).is_zero()) continue;
        UniPoly u = substitute_other(s, 1, cand);
        if (gcd(u, u.derivative()).degree() != 0) continue;
        c = cand;
        image = u;
        found_line = true;
    }
    if (!found_line) throw std::runtime_error("no generic line for factorization");

    auto local = factor_univariate(image.monic());
    int r = static_cast<int>(local.size());
    if (r == 1) {
        out.push_back(s.monic());
        return out;
    }

    int K = s.degree(2) + lead.degree(2) + 1;
    Series S = shifted_series(s, c, K);

    // Lambda(t): leading x-coefficient as a scalar series; a unit at t = 0.
    std::vector<GaussianRational> lambda(static_cast<size_t>(K), GaussianRational(0));
    for (int k = 0; k < K; ++k) lambda[static_cast<size_t>(k)] = S[static_cast<size_t>(k)].coeff(d);
    std::vector<GaussianRational> lambda_inv(static_cast<size_t>(K), GaussianRational(0));
    lambda_inv[0] = lambda[0].inverse();
    for (int k = 1; k < K; ++k) {
        GaussianRational acc(0);
        for (int j = 1; j <= k; ++j)
            acc += lambda[static_cast<size_t>(j)] * lambda_inv[static_cast<size_t>(k - j)];
        lambda_inv[static_cast<size_t>(k)] = -(lambda_inv[0] * acc);
    }

    // monic series: S / Lambda
    Series Shat(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j <= k; ++j)
            Shat[static_cast<size_t>(k)] +=
                S[static_cast<size_t>(j)].scaled(lambda_inv[static_cast<size_t>(k - j)]);
    }

    // Bezout data for the pairwise coprime local factors
    std::vector<UniPoly> u(local.size());
    for (size_t i = 0; i < local.size(); ++i) u[i] = local[i].first;
    UniPoly U = Shat[0];
    std::vector<UniPoly> sigma(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        UniPoly v = U.divmod(u[i]).first;
        ExtendedGcd eg = extended_gcd(v, u[i]);
        if (eg.g.degree() != 0) throw std::logic_error("local factors not coprime");
        sigma[i] = eg.s.divmod(u[i]).second;
    }

    // lift order by order: product of the series factors matches Shat mod t^K
    std::vector<Series> G(u.size(), Series(static_cast<size_t>(K)));
    for (size_t i = 0; i < u.size(); ++i) G[i][0] = u[i];
    for (int k = 1; k < K; ++k) {
        Series prod = G[0];
        for (size_t i = 1; i < G.size(); ++i) prod = series_mul(prod, G[i], K);
        UniPoly err = Shat[static_cast<size_t>(k)] - prod[static_cast<size_t>(k)];
        if (err.is_zero()) continue;
        for (size_t i = 0; i < u.size(); ++i)
            G[i][static_cast<size_t>(k)] = (err * sigma[i]).divmod(u[i]).second;
    }

    // subset recombination, smallest subsets first; exact division verifies
    Series lambda_series(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) lambda_series[static_cast<size_t>(k)] = UniPoly(lambda[static_cast<size_t>(k)]);

    std::vector<int> active(u.size());
    std::iota(active.begin(), active.end(), 0);
    BiPoly rem = s;
    bool progress = true;
    while (progress) {
        progress = false;
        int n = static_cast<int>(active.size());
        if (n == 0) break;
        if (n == 1) {
            out.push_back(rem.monic());
            active.clear();
            break;
        }
        for (int size = 1; 2 * size <= n && !progress; ++size) {
            std::vector<int> comb = first_combination(size);
            do {
                Series cand = lambda_series;
                for (int pos : comb)
                    cand = series_mul(cand, G[static_cast<size_t>(active[static_cast<size_t>(pos)])], K);
                BiPoly H = unshift_series(cand, c);
                if (H.is_zero()) continue;
                BiPoly Hp = H.divide_exact(coefficient_content(H, 1)).monic();
                auto q = rem.try_divide(Hp);
                if (!q) continue;
                out.push_back(Hp);
                rem = *q;
                std::vector<int> keep;
                for (int pos = 0; pos < n; ++pos) {
                    if (std::find(comb.begin(), comb.end(), pos) == comb.end())
                        keep.push_back(active[static_cast<size_t>(pos)]);
                }
                active = std::move(keep);
                progress = true;
                break;
            } while (next_combination(comb, n));
        }
        if (!progress && !active.empty()) {
            out.push_back(rem.monic());
            active.clear();
        }
    }
    return out;
}

}  // namespace

FactorList factor_irreducible(const BiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    int cap = factorization_degree_cap();
    if (f.total_degree() > cap) throw DegreeTooLarge(f.total_degree(), cap);

    FactorList result;
    result.unit = GaussianRational(1);
    if (f.is_constant()) {
        result.unit = f.constant_value();
        return result;
    }

    std::vector<BiPoly> distinct;

    // monomial part
    Exponent low = f.min_exponents();
    BiPoly work = f;
    if (low.e1 > 0 || low.e2 > 0) {
        work = work.divide_exact(BiPoly::monomial(low, GaussianRational(1)));
        if (low.e1 > 0) distinct.push_back(BiPoly::variable(1));
        if (low.e2 > 0) distinct.push_back(BiPoly::variable(2));
    }

    if (!work.is_constant()) {
        if (work.degree(1) == 0 || work.degree(2) == 0) {
            int var = work.degree(1) == 0 ? 2 : 1;
            for (const auto& [q, mult] : factor_univariate(univariate_view(work, var)))
                distinct.push_back(q.to_bipoly(var).monic());
        } else {
            BiPoly content = coefficient_content(work, 1);
            if (!content.is_constant()) {
                for (const auto& [q, mult] : factor_univariate(univariate_view(content, 2)))
                    distinct.push_back(q.to_bipoly(2).monic());
                work = work.divide_exact(content);
            }
            BiPoly sf = squarefree_part(work);
            for (const BiPoly& q : split_bivariate(sf)) distinct.push_back(q);
        }
    }

    // multiplicities against the original polynomial; the residue after all
    // divisions must be a constant, which becomes the unit
    BiPoly residue = f;
    for (const BiPoly& q : distinct) {
        int mult = 0;
        while (auto quo = residue.try_divide(q)) {
            residue = *quo;
            ++mult;
        }
        if (mult == 0) throw std::logic_error("spurious factor in factorization");
        result.factors.push_back({q, mult});
    }
    if (!residue.is_constant()) throw std::logic_error("incomplete factorization");
    result.unit = residue.constant_value();

    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly.compare(b.poly) < 0; });
    return result;
}

}  // namespace polyhull
