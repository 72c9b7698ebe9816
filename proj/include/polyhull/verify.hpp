#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyhull/hull.hpp"
#include "polyhull/numeric.hpp"
#include "polyhull/polyhedron.hpp"

namespace polyhull {

struct EmptySampleSet : std::runtime_error {
    EmptySampleSet() : std::runtime_error("no samples supplied") {}
};
struct IllConditioned : std::runtime_error {
    IllConditioned() : std::runtime_error("separation fit ill-conditioned; raise degree or samples") {}
};

using Point3 = std::array<Cplx, 3>;  // (z1, z2, w)

struct ResidualStats {
    double max = 0;
    double mean = 0;
    int count = 0;
};

// max/mean of |conj(P o Psi) - h o Psi| over Gamma samples.
ResidualStats verify_boundary_relation(const ProblemSpec& spec,
                                       const std::vector<PointPair>& gamma_samples);

// Numeric scan of X samples for |Delta| <= tol (candidate points of the
// non-totally-real set Sigma), cross-referenced against the factor varieties.
struct TotallyRealScan {
    struct Entry {
        PointPair point;
        double abs_delta = 0;
        bool flagged = false;               // |Delta| <= tol
        std::vector<int> vanishing_factors;  // indices into the factor list
    };
    std::vector<Entry> entries;
    int flagged_count = 0;
};
TotallyRealScan totally_real_scan(const ProblemSpec& spec,
                                  const std::vector<PointPair>& x_samples,
                                  const std::vector<BiPoly>& factors, double tol);

// Max relative deviation between the exact numerator route and the direct
// determinant evaluation at random points; contract <= 1e-8.
double cross_check_delta(const ProblemSpec& spec, int trials, std::uint64_t seed);

struct SeparationCertificate {
    int degree = 0;
    std::vector<Cplx> coefficients;  // monomial basis, graded order
    Cplx value_at_point{};
    double sup_on_cloud = 0;
    bool separated = false;  // |value_at_point| > sup_on_cloud * 1.05
};

// Ridge-regularized least-squares polynomial with H(point) = 1, H ~ 0 on the
// cloud; separated=true is a numerical witness of non-membership in the
// cloud's hull, separated=false only evidence of membership.
SeparationCertificate separation_search(const std::vector<Point3>& cloud,
                                        const Point3& point, int degree);

// Points of X (graph relation locus) found by local search, off L and Gamma.
std::vector<PointPair> find_x_samples(const ProblemSpec& spec, int count,
                                      std::uint64_t seed);

}  // namespace polyhull
