#include "polyhull/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "polyhull/unipoly.hpp"

namespace polyhull {

BiPoly::BiPoly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, std::move(c));
}

BiPoly BiPoly::variable(int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("variable index");
    BiPoly v;
    v.terms_.emplace(which == 1 ? Exponent{1, 0} : Exponent{0, 1}, GaussianRational(1));
    return v;
}

BiPoly BiPoly::monomial(Exponent e, GaussianRational c) {
    if (e.e1 < 0 || e.e2 < 0) throw std::invalid_argument("negative exponent");
    BiPoly m;
    if (!c.is_zero()) m.terms_.emplace(e, std::move(c));
    return m;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

GaussianRational BiPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

int BiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, var == 1 ? e.e1 : e.e2);
    return d;
}

Exponent BiPoly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const GaussianRational& BiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

GaussianRational BiPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

Exponent BiPoly::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    Exponent m{INT32_MAX, INT32_MAX};
    for (const auto& [e, c] : terms_) {
        m.e1 = std::min(m.e1, e.e1);
        m.e2 = std::min(m.e2, e.e2);
    }
    return m;
}

void BiPoly::insert(Exponent e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.insert({ea.e1 + eb.e1, ea.e2 + eb.e2}, ca * cb);
        }
    }
    return r;
}

BiPoly BiPoly::scaled(const GaussianRational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(GaussianRational(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

BiPoly BiPoly::derivative(int var) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        int k = var == 1 ? e.e1 : e.e2;
        if (k == 0) continue;
        Exponent d = var == 1 ? Exponent{e.e1 - 1, e.e2} : Exponent{e.e1, e.e2 - 1};
        r.insert(d, c * GaussianRational(k));
    }
    return r;
}

BiPoly BiPoly::shifted(int d1, int d2) const {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative shift");
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.e1 + d1, e.e2 + d2}, c);
    return r;
}

std::complex<double> BiPoly::evaluate(std::complex<double> z1, std::complex<double> z2) const {
    if (terms_.empty()) return {0.0, 0.0};
    int d1 = degree(1), d2 = degree(2);
    std::vector<std::complex<double>> p1(d1 + 1), p2(d2 + 1);
    p1[0] = 1.0;
    for (int k = 1; k <= d1; ++k) p1[k] = p1[k - 1] * z1;
    p2[0] = 1.0;
    for (int k = 1; k <= d2; ++k) p2[k] = p2[k - 1] * z2;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) acc += c.to_complex() * p1[e.e1] * p2[e.e2];
    return acc;
}

GaussianRational BiPoly::evaluate_exact(const GaussianRational& v1,
                                        const GaussianRational& v2) const {
    if (terms_.empty()) return GaussianRational(0);
    int d1 = degree(1), d2 = degree(2);
    std::vector<GaussianRational> p1(d1 + 1, GaussianRational(1)), p2(d2 + 1, GaussianRational(1));
    for (int k = 1; k <= d1; ++k) p1[k] = p1[k - 1] * v1;
    for (int k = 1; k <= d2; ++k) p2[k] = p2[k - 1] * v2;
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) acc += c * p1[e.e1] * p2[e.e2];
    return acc;
}

BiPoly BiPoly::compose(const BiPoly& q1, const BiPoly& q2) const {
    // Horner in var1 over coefficients that are themselves Horner images in var2.
    auto rows = coefficients_in(*this, 1);
    auto subst2 = [&](const BiPoly& g) {
        // g depends only on var2; fold its dense coefficients through q2
        std::vector<GaussianRational> cs(static_cast<size_t>(std::max(g.degree(2), -1) + 1),
                                         GaussianRational(0));
        for (const auto& [e, c] : g.terms()) cs[e.e2] = c;
        BiPoly acc;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q2 + BiPoly(*it);
        return acc;
    };
    BiPoly acc;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * q1 + subst2(*it);
    return acc;
}

BiPoly BiPoly::conjugate_reflect() const {
    if (terms_.empty()) return {};
    int m = degree(1), n = degree(2);
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{m - e.e1, n - e.e2}, c.conj());
    return r;
}

BiPoly BiPoly::conjugate_coefficients() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

namespace {

bool monomial_divides(const Exponent& d, const Exponent& e) {
    return d.e1 <= e.e1 && d.e2 <= e.e2;
}

}  // namespace

std::pair<BiPoly, BiPoly> BiPoly::divmod(const BiPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    BiPoly q, r, work = *this;
    const Exponent de = d.leading_exponent();
    const GaussianRational dc_inv = d.leading_coefficient().inverse();
    while (!work.is_zero()) {
        Exponent we = work.leading_exponent();
        const GaussianRational& wc = work.leading_coefficient();
        if (monomial_divides(de, we)) {
            BiPoly t = BiPoly::monomial({we.e1 - de.e1, we.e2 - de.e2}, wc * dc_inv);
            q += t;
            work -= t * d;
        } else {
            BiPoly t = BiPoly::monomial(we, wc);
            r += t;
            work -= t;
        }
    }
    return {q, r};
}

std::optional<BiPoly> BiPoly::try_divide(const BiPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

BiPoly BiPoly::divide_exact(const BiPoly& d) const {
    auto q = try_divide(d);
    if (!q) throw NotDivisible();
    return *q;
}

BiPoly BiPoly::monic() const {
    if (terms_.empty()) return {};
    return scaled(leading_coefficient().inverse());
}

int BiPoly::compare(const BiPoly& o) const {
    auto ita = terms_.rbegin(), enda = terms_.rend();
    auto itb = o.terms_.rbegin(), endb = o.terms_.rend();
    GradedLexLess lt;
    for (; ita != enda && itb != endb; ++ita, ++itb) {
        if (!(ita->first == itb->first)) return lt(ita->first, itb->first) ? -1 : 1;
        int c = ita->second.compare(itb->second);
        if (c != 0) return c;
    }
    if (ita != enda) return 1;
    if (itb != endb) return -1;
    return 0;
}

namespace {

std::string magnitude_str(const mpq_class& q) {
    mpq_class a = abs(q);
    return a.get_str();
}

std::string monomial_str(const Exponent& e, const char* v1, const char* v2) {
    std::string s;
    if (e.e1 > 0) {
        s += v1;
        if (e.e1 > 1) s += "^" + std::to_string(e.e1);
    }
    if (e.e2 > 0) {
        if (!s.empty()) s += "*";
        s += v2;
        if (e.e2 > 1) s += "^" + std::to_string(e.e2);
    }
    return s;
}

}  // namespace

std::string BiPoly::str(const char* v1, const char* v2) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const GaussianRational& c = it->second;
        std::string mono = monomial_str(it->first, v1, v2);
        if (mono.empty()) {
            // constant term
            if (first) {
                out += c.str();
            } else if (c.is_real()) {
                out += (c.real() < 0 ? " - " : " + ") + magnitude_str(c.real());
            } else if (c.is_imaginary()) {
                std::string m = magnitude_str(c.imag());
                out += (c.imag() < 0 ? " - " : " + ") + (m == "1" ? "i" : m + "*i");
            } else {
                out += " + (" + c.str() + ")";
            }
        } else if (c.is_real()) {
            std::string m = magnitude_str(c.real());
            std::string piece = (m == "1" ? "" : m + "*") + mono;
            if (first) out += (c.real() < 0 ? "-" : "") + piece;
            else out += (c.real() < 0 ? " - " : " + ") + piece;
        } else if (c.is_imaginary()) {
            std::string m = magnitude_str(c.imag());
            std::string piece = (m == "1" ? "i*" : m + "*i*") + mono;
            if (first) out += (c.imag() < 0 ? "-" : "") + piece;
            else out += (c.imag() < 0 ? " - " : " + ") + piece;
        } else {
            std::string piece = "(" + c.str() + ")*" + mono;
            out += first ? piece : " + " + piece;
        }
        first = false;
    }
    return out;
}

// ---- GCD via primitive pseudo-remainder sequences ----

namespace {

// f viewed in R[x] with R = Q(i)[other]; rows[k] corresponds to x^k.
std::vector<UniPoly> rows_in(const BiPoly& f, int var) {
    auto bp = coefficients_in(f, var);
    std::vector<UniPoly> rows;
    rows.reserve(bp.size());
    int other = var == 1 ? 2 : 1;
    for (const BiPoly& g : bp) {
        std::vector<GaussianRational> cs(static_cast<size_t>(std::max(g.degree(other), 0) + 1),
                                         GaussianRational(0));
        for (const auto& [e, c] : g.terms()) cs[other == 1 ? e.e1 : e.e2] = c;
        rows.emplace_back(std::move(cs));
    }
    return rows;
}

BiPoly from_rows(const std::vector<UniPoly>& rows, int var) {
    BiPoly acc;
    for (size_t k = 0; k < rows.size(); ++k) {
        BiPoly coeff = rows[k].to_bipoly(var == 1 ? 2 : 1);
        acc += var == 1 ? coeff.shifted(static_cast<int>(k), 0)
                        : coeff.shifted(0, static_cast<int>(k));
    }
    return acc;
}

// Monic GCD over Q(i)[other] of the x-coefficients.
UniPoly content_in(const BiPoly& f, int var) {
    UniPoly c;
    for (const UniPoly& row : rows_in(f, var)) c = gcd(c, row);
    return c;
}

BiPoly divide_by_content(const BiPoly& f, int var, const UniPoly& content) {
    if (content.is_constant()) return f.scaled(content.coeff(0).inverse());
    auto rows = rows_in(f, var);
    for (UniPoly& row : rows) {
        auto [q, r] = row.divmod(content);
        if (!r.is_zero()) throw std::logic_error("content division not exact");
        row = std::move(q);
    }
    return from_rows(rows, var);
}

BiPoly primitive_part(const BiPoly& f, int var) {
    if (f.is_zero()) return f;
    return divide_by_content(f, var, content_in(f, var));
}

// Pseudo-remainder of a by b in the main variable: multiplies through by the
// leading coefficient of b often enough that every division step is exact.
BiPoly pseudo_rem(BiPoly a, const BiPoly& b, int var) {
    int db = b.degree(var);
    auto b_rows = rows_in(b, var);
    BiPoly lcb = from_rows({b_rows.back()}, var);
    while (!a.is_zero() && a.degree(var) >= db) {
        int da = a.degree(var);
        auto a_rows = rows_in(a, var);
        BiPoly lca = from_rows({a_rows.back()}, var);
        BiPoly shift = var == 1 ? b.shifted(da - db, 0) : b.shifted(0, da - db);
        a = a * lcb - shift * lca;
        if (!a.is_zero() && a.degree(var) >= da) throw std::logic_error("pseudo_rem stuck");
    }
    return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return BiPoly(GaussianRational(1));

    int var;
    if (a.degree(1) > 0 && b.degree(1) > 0) var = 1;
    else if (a.degree(2) > 0 && b.degree(2) > 0) var = 2;
    else return BiPoly(GaussianRational(1));

    UniPoly ca = content_in(a, var), cb = content_in(b, var);
    BiPoly A = divide_by_content(a, var, ca);
    BiPoly B = divide_by_content(b, var, cb);
    UniPoly cg = gcd(ca, cb);

    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    for (;;) {
        if (B.is_zero()) break;
        if (B.degree(var) == 0) {
            A = BiPoly(GaussianRational(1));
            break;
        }
        BiPoly R = pseudo_rem(A, B, var);
        A = std::move(B);
        B = R.is_zero() ? BiPoly() : primitive_part(R, var);
    }
    BiPoly g = primitive_part(A, var) * cg.to_bipoly(var == 1 ? 2 : 1);
    return g.monic();
}

// ---- Resultant via fraction-free (Bareiss) elimination ----

BiPoly resultant(const BiPoly& a, const BiPoly& b, int var) {
    if (var != 1 && var != 2) throw std::invalid_argument("variable index");
    if (a.is_zero() || b.is_zero()) return {};
    int da = a.degree(var), db = b.degree(var);
    int n = da + db;
    if (n == 0) return BiPoly(GaussianRational(1));
    int other_var = var == 1 ? 2 : 1;

    auto arows = rows_in(a, var), brows = rows_in(b, var);
    // Sylvester matrix: db rows of a-coefficients (descending), da rows of b's.
    std::vector<std::vector<UniPoly>> M(static_cast<size_t>(n),
                                        std::vector<UniPoly>(static_cast<size_t>(n)));
    for (int r = 0; r < db; ++r) {
        for (int k = 0; k <= da; ++k) M[r][r + k] = arows[static_cast<size_t>(da - k)];
    }
    for (int r = 0; r < da; ++r) {
        for (int k = 0; k <= db; ++k) M[db + r][r + k] = brows[static_cast<size_t>(db - k)];
    }

    UniPoly prev(GaussianRational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!M[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return {};
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                UniPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto [q, r] = num.divmod(prev);
                if (!r.is_zero()) throw std::logic_error("Bareiss division not exact");
                M[i][j] = std::move(q);
            }
            M[i][k] = UniPoly();
        }
        prev = M[k][k];
    }
    BiPoly det = M[n - 1][n - 1].to_bipoly(other_var);
    return sign < 0 ? -det : det;
}

BiPoly squarefree_part(const BiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free part of zero");
    if (f.is_constant()) return f;
    BiPoly d = gcd(gcd(f, f.derivative(1)), f.derivative(2));
    return f.divide_exact(d);
}

}  // namespace polyhull
