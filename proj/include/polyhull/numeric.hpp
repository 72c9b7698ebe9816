#pragma once

#include <array>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "polyhull/bipoly.hpp"

namespace polyhull {

using Cplx = std::complex<double>;
using PointPair = std::array<Cplx, 2>;  // a point of C^2

// Coefficients ascending, c[k] * x^k.
Cplx horner(const std::vector<Cplx>& c, Cplx x);

// Drop leading coefficients that are negligible against the largest one.
std::vector<Cplx> trim_leading(std::vector<Cplx> c, double rel_tol = 1e-12);

// All complex roots by Aberth simultaneous iteration with Newton polishing.
// Initial guesses on a circle of radius 1 + max|c_k/c_n| with random phases.
std::vector<Cplx> all_roots(const std::vector<Cplx>& coeffs, std::mt19937_64& rng,
                            int max_iter = 200);

// Complex coefficient vector of a univariate slice f(x, fixed) or f(fixed, x).
std::vector<Cplx> slice_coefficients(const BiPoly& f, int var, Cplx fixed_other);

// Numeric resultant eliminating `var`: coefficients (ascending, in the other
// variable) of det Syl(a, b), computed by evaluation at scaled roots of unity
// and inverse DFT.
std::vector<Cplx> numeric_resultant(const BiPoly& a, const BiPoly& b, int var);

// Newton iteration for the square system F(z) = (f1, f2) = 0 with the exact
// Jacobian; returns false when the step does not converge.
bool newton2(const BiPoly& f1, const BiPoly& f2, PointPair& z, double tol = 1e-14,
             int max_iter = 60);

// Levenberg-Marquardt on small real residual systems (n unknowns, m residuals).
struct LMProblem {
    int n = 0;
    int m = 0;
    // residuals r (size m) and Jacobian J (row-major m x n) at x (size n)
    std::function<void(const std::vector<double>&, std::vector<double>&,
                       std::vector<double>&)> eval;
};
bool levenberg_marquardt(const LMProblem& prob, std::vector<double>& x,
                         double residual_tol, int max_iter = 120);

// Uniform sample in the complex disc of the given radius.
Cplx random_disc(std::mt19937_64& rng, double radius);

}  // namespace polyhull
