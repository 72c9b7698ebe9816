#pragma once

#include <complex>
#include <string>

#include "polyhull/bipoly.hpp"

namespace polyhull {

// numerator / (var1^pow1 * var2^pow2), the shape of the reflected boundary
// function h = K / (w1^m w2^n). Normalized so that the numerator shares no
// monomial factor with the denominator.
struct LaurentFraction {
    BiPoly numerator;
    int pow1 = 0;
    int pow2 = 0;

    LaurentFraction() = default;
    LaurentFraction(BiPoly num, int p1, int p2);

    std::complex<double> evaluate(std::complex<double> w1, std::complex<double> w2) const;
    std::string str(const char* v1 = "w1", const char* v2 = "w2") const;
};

}  // namespace polyhull
