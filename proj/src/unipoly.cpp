#include "polyhull/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyhull {

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(GaussianRational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UniPoly UniPoly::x() {
    return UniPoly({GaussianRational(0), GaussianRational(1)});
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& UniPoly::lc() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

GaussianRational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
    return c_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GaussianRational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GaussianRational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    UniPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return {};
    std::vector<GaussianRational> out(c_.size() + static_cast<size_t>(k), GaussianRational(0));
    std::copy(c_.begin(), c_.end(), out.begin() + k);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> out(c_.size() - 1, GaussianRational(0));
    for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * GaussianRational(static_cast<int>(k));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return scaled(lc().inverse());
}

GaussianRational UniPoly::evaluate(const GaussianRational& v) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

std::complex<double> UniPoly::evaluate(std::complex<double> v) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->to_complex();
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly(), r};
    std::vector<GaussianRational> q(static_cast<size_t>(r.degree() - d.degree()) + 1,
                                    GaussianRational(0));
    GaussianRational inv = d.lc().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        GaussianRational t = r.lc() * inv;
        q[static_cast<size_t>(k)] = t;
        r -= d.scaled(t).shifted(k);
    }
    return {UniPoly(std::move(q)), r};
}

bool UniPoly::divides(const UniPoly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

BiPoly UniPoly::to_bipoly(int var) const {
    BiPoly acc;
    for (size_t k = 0; k < c_.size(); ++k) {
        Exponent e = var == 1 ? Exponent{static_cast<int>(k), 0}
                              : Exponent{0, static_cast<int>(k)};
        acc += BiPoly::monomial(e, c_[k]);
    }
    return acc;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.is_zero() ? UniPoly() : f.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0(GaussianRational(1)), s1;
    UniPoly t0, t1(GaussianRational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
    GaussianRational inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<BiPoly> coefficients_in(const BiPoly& f, int var) {
    if (var != 1 && var != 2) throw std::invalid_argument("variable index");
    int d = f.degree(var);
    std::vector<BiPoly> out(static_cast<size_t>(std::max(d, -1) + 1));
    for (const auto& [e, c] : f.terms()) {
        int k = var == 1 ? e.e1 : e.e2;
        Exponent rest = var == 1 ? Exponent{0, e.e2} : Exponent{e.e1, 0};
        out[static_cast<size_t>(k)] += BiPoly::monomial(rest, c);
    }
    return out;
}

UniPoly substitute_other(const BiPoly& f, int var, const GaussianRational& value) {
    if (var != 1 && var != 2) throw std::invalid_argument("variable index");
    int d = f.degree(var);
    std::vector<GaussianRational> out(static_cast<size_t>(std::max(d, -1) + 1),
                                      GaussianRational(0));
    int other_max = f.degree(var == 1 ? 2 : 1);
    std::vector<GaussianRational> powers(static_cast<size_t>(std::max(other_max, 0) + 1),
                                         GaussianRational(1));
    for (size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * value;
    for (const auto& [e, c] : f.terms()) {
        int k = var == 1 ? e.e1 : e.e2;
        int oe = var == 1 ? e.e2 : e.e1;
        out[static_cast<size_t>(k)] += c * powers[static_cast<size_t>(oe)];
    }
    return UniPoly(std::move(out));
}

}  // namespace polyhull
