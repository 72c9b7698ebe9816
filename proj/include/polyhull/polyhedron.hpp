#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polyhull/bipoly.hpp"
#include "polyhull/numeric.hpp"

namespace polyhull {

struct PolyhedronSpec {
    BiPoly p1, p2;  // both non-constant, in variables z1, z2
};

// Solutions of p1 = e^{i theta}, p2 = e^{i phi}.
struct TorusFiber {
    double theta = 0;
    double phi = 0;
    std::vector<PointPair> roots;
    std::vector<double> residuals;  // max(|p1-e^{i theta}|, |p2-e^{i phi}|) per root
};

enum class Verdict { Pass, Fail, Inconclusive };
enum class Method { Exact, Sampled };

struct Witness {
    PointPair point;
    double residual = 0;
};

struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::Sampled;
    std::vector<Witness> witnesses;  // Fail carries at least one
    std::string note;
    std::optional<double> observed_min;  // sampled minimum backing a Pass
};

const char* to_string(Verdict v);
const char* to_string(Method m);

struct SamplingFailed : std::runtime_error {
    explicit SamplingFailed(const std::string& what) : std::runtime_error(what) {}
};
struct ResultantDegenerate : std::runtime_error {
    ResultantDegenerate() : std::runtime_error("resultant leading coefficient vanishes") {}
};
struct NoConvergence : std::runtime_error {
    NoConvergence() : std::runtime_error("root iteration did not converge") {}
};

// Gradient of each p_i nonvanishing on its unit-modulus level set, and the
// wedge W = d p1 ^ d p2 nonvanishing on Gamma. Fail certified by a polished
// witness; Pass reports the sampled minimum.
CheckReport check_nondegeneracy(const PolyhedronSpec& spec, int samples, double tol,
                                std::uint64_t seed);

// Exact for homogeneous pairs (proper iff the only common zero is 0); for
// structured or top-form-reducible pairs a sufficient exact condition;
// otherwise Inconclusive with a radial growth heuristic.
CheckReport check_properness(const PolyhedronSpec& spec);

// Homogeneous polyhedra are star-shaped, hence contractible.
CheckReport check_contractible_homogeneous(const PolyhedronSpec& spec);

// Records the simple-connectedness of the leaves {p_i = c}, |c| = 1, as a
// user assertion; no algorithmic test exists.
CheckReport leaf_assertion_report();

TorusFiber solve_fiber(const PolyhedronSpec& spec, double theta, double phi,
                       std::uint64_t seed);

// Union of fibers over the uniform (theta, phi) grid; points failing the
// boundary residual 1e-8 are dropped and counted in `dropped`.
struct GammaCloud {
    std::vector<PointPair> points;
    std::vector<double> thetas, phis, residuals;  // parallel to points
    int dropped = 0;
    int failed_fibers = 0;
};
GammaCloud sample_gamma(const PolyhedronSpec& spec, int grid_theta, int grid_phi,
                        std::uint64_t seed);

// CSV columns: re_z1, im_z1, re_z2, im_z2, theta, phi, residual.
void write_gamma_csv(std::ostream& os, const GammaCloud& cloud);

}  // namespace polyhull
