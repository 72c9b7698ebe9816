#pragma once

#include <complex>
#include <vector>

#include "polyhull/bipoly.hpp"
#include "polyhull/gaussian_rational.hpp"

namespace polyhull {

// Dense univariate polynomial over Q(i); coefficient k multiplies x^k.
// Workhorse for content computations, Euclidean GCD, Hensel lifting and
// generic-line images of bivariate polynomials.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(GaussianRational c);
    explicit UniPoly(std::vector<GaussianRational> coeffs);

    static UniPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const GaussianRational& lc() const;
    GaussianRational coeff(int k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const GaussianRational& s) const;
    UniPoly shifted(int k) const;  // multiply by x^k
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;
    UniPoly monic() const;

    GaussianRational evaluate(const GaussianRational& v) const;
    std::complex<double> evaluate(std::complex<double> v) const;

    // Field division: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    bool divides(const UniPoly& f) const;

    // Univariate polynomial in `var`.
    BiPoly to_bipoly(int var) const;

private:
    void trim();
    std::vector<GaussianRational> c_;  // no trailing zeros
};

// Monic Euclidean GCD over the field Q(i).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Extended GCD: g = s*a + t*b with g monic (or zero).
struct ExtendedGcd {
    UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

// View a bivariate polynomial as univariate in `var`, coefficients being
// polynomials in the other variable.
std::vector<BiPoly> coefficients_in(const BiPoly& f, int var);

// Substitute `value` for the variable other than `var`; result univariate.
UniPoly substitute_other(const BiPoly& f, int var, const GaussianRational& value);

}  // namespace polyhull
