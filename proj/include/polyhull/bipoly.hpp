#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "polyhull/gaussian_rational.hpp"

namespace polyhull {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact polynomial division failed") {}
};

struct Exponent {
    int e1 = 0;
    int e2 = 0;
    int total() const { return e1 + e2; }
    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.e1 == b.e1 && a.e2 == b.e2;
    }
};

// Graded lexicographic order with var1 > var2; the fixed monomial order for
// division, leading terms and rendering.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e1 < b.e1;
    }
};

// Sparse polynomial in two variables over Q(i). Variables are abstract
// (1 and 2); rendering chooses the z or w alphabet.
class BiPoly {
public:
    using TermMap = std::map<Exponent, GaussianRational, GradedLexLess>;

    BiPoly() = default;
    explicit BiPoly(GaussianRational c);
    explicit BiPoly(long c) : BiPoly(GaussianRational(c)) {}

    static BiPoly variable(int which);  // 1 or 2
    static BiPoly monomial(Exponent e, GaussianRational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    GaussianRational constant_value() const;  // requires is_constant or zero

    int total_degree() const;  // -1 for the zero polynomial
    int degree(int var) const;
    Exponent leading_exponent() const;
    const GaussianRational& leading_coefficient() const;
    GaussianRational coefficient(Exponent e) const;
    Exponent min_exponents() const;  // per-variable minima over the support

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly scaled(const GaussianRational& c) const;
    BiPoly pow(unsigned e) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly derivative(int var) const;
    BiPoly shifted(int d1, int d2) const;  // multiply by var1^d1 var2^d2; d >= 0

    std::complex<double> evaluate(std::complex<double> z1, std::complex<double> z2) const;
    GaussianRational evaluate_exact(const GaussianRational& v1, const GaussianRational& v2) const;
    // Substitute polynomials for both variables (composition with a map).
    BiPoly compose(const BiPoly& q1, const BiPoly& q2) const;

    // Reflected polynomial: conjugate coefficients, reverse exponents against
    // the bidegree, so that for f of bidegree (m,n),
    // reflect(f) = var1^m var2^n conj(f)(1/var1, 1/var2).
    BiPoly conjugate_reflect() const;
    BiPoly conjugate_coefficients() const;

    // Division by a single divisor under graded lex: f = q*d + r where no
    // monomial of r is divisible by the leading monomial of d.
    std::pair<BiPoly, BiPoly> divmod(const BiPoly& d) const;
    std::optional<BiPoly> try_divide(const BiPoly& d) const;
    BiPoly divide_exact(const BiPoly& d) const;  // throws NotDivisible

    BiPoly monic() const;  // divide by the graded-lex leading coefficient

    // Deterministic total order for canonical factor lists.
    int compare(const BiPoly& o) const;

    // Canonical rendering: descending graded-lex terms, exact coefficients.
    std::string str(const char* v1 = "z1", const char* v2 = "z2") const;

private:
    void insert(Exponent e, const GaussianRational& c);
    TermMap terms_;
};

// Monic normalized GCD; gcd(0,0) is an error.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Resultant eliminating `var` (Sylvester determinant, computed fraction-free).
// The result is a polynomial in the other variable.
BiPoly resultant(const BiPoly& a, const BiPoly& b, int var);

// f / (repeated factors): product of the distinct irreducible factors.
BiPoly squarefree_part(const BiPoly& f);

}  // namespace polyhull
