#include "polyhull/numeric.hpp"

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "test_util.hpp"

using namespace polyhull;
using namespace polyhull::testutil;

namespace {

double min_dist(const std::vector<Cplx>& roots, Cplx target) {
    double best = 1e300;
    for (const Cplx& r : roots) best = std::min(best, std::abs(r - target));
    return best;
}

}  // namespace

TEST_CASE("root finding") {
    std::mt19937_64 rng(7);
    SUBCASE("quadratic with complex pair") {
        // z^2 - z + 1 = 0 at (1 +- i sqrt 3)/2
        std::vector<Cplx> c{{1, 0}, {-1, 0}, {1, 0}};
        auto roots = all_roots(c, rng);
        REQUIRE(roots.size() == 2);
        double s3 = std::sqrt(3.0) / 2.0;
        CHECK(min_dist(roots, {0.5, s3}) < 1e-10);
        CHECK(min_dist(roots, {0.5, -s3}) < 1e-10);
        for (const Cplx& r : roots) CHECK(std::abs(horner(c, r)) < 1e-10);
    }
    SUBCASE("cube roots of unity") {
        std::vector<Cplx> c{{-1, 0}, {0, 0}, {0, 0}, {1, 0}};
        auto roots = all_roots(c, rng);
        REQUIRE(roots.size() == 3);
        for (const Cplx& r : roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
        CHECK(min_dist(roots, {1, 0}) < 1e-10);
    }
    SUBCASE("roots at the origin are stripped exactly") {
        // z^3 - 2 z^2 = z^2 (z - 2)
        std::vector<Cplx> c{{0, 0}, {0, 0}, {-2, 0}, {1, 0}};
        auto roots = all_roots(c, rng);
        REQUIRE(roots.size() == 3);
        CHECK(std::count_if(roots.begin(), roots.end(),
                            [](Cplx r) { return std::abs(r) == 0.0; }) == 2);
        CHECK(min_dist(roots, {2, 0}) < 1e-10);
    }
    SUBCASE("constant and zero polynomials have no roots") {
        CHECK(all_roots({{5, 0}}, rng).empty());
        CHECK(all_roots({}, rng).empty());
        CHECK(all_roots({{0, 0}, {0, 0}}, rng).empty());
    }
}

TEST_CASE("trim_leading") {
    std::vector<Cplx> c{{1, 0}, {2, 0}, {1e-15, 0}};
    CHECK(trim_leading(c).size() == 2);
    CHECK(trim_leading({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("numeric resultant matches the exact one") {
    // res_z2(z2 + z1 - 3, z1 z2 - 2) = -z1^2 + 3 z1 - 2
    BiPoly a = z2() + z1() - BiPoly(gr(3));
    BiPoly b = z1() * z2() - BiPoly(gr(2));
    auto r = numeric_resultant(a, b, 2);
    REQUIRE(r.size() >= 3);
    CHECK(std::abs(r[0] - Cplx{-2, 0}) < 1e-8);
    CHECK(std::abs(r[1] - Cplx{3, 0}) < 1e-8);
    CHECK(std::abs(r[2] - Cplx{-1, 0}) < 1e-8);
    for (size_t k = 3; k < r.size(); ++k) CHECK(std::abs(r[k]) < 1e-8);

    // res_z2(z1 z2 - 1, z2^2 - z1) = 1 - z1^3; leading coefficient of the
    // first argument vanishes at z1 = 0, which interpolation must tolerate
    BiPoly f = z1() * z2() - BiPoly(gr(1));
    BiPoly g = z2().pow(2) - z1();
    auto r2 = numeric_resultant(f, g, 2);
    REQUIRE(r2.size() >= 4);
    CHECK(std::abs(r2[0] - Cplx{1, 0}) < 1e-8);
    CHECK(std::abs(r2[1]) < 1e-8);
    CHECK(std::abs(r2[2]) < 1e-8);
    CHECK(std::abs(r2[3] - Cplx{-1, 0}) < 1e-8);
}

TEST_CASE("slice_coefficients") {
    BiPoly f = z1().pow(2) * z2() + z2().pow(3);  // z1^2 z2 + z2^3
    auto c = slice_coefficients(f, 1, Cplx{2, 0});  // in z1 at z2 = 2
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0] - Cplx{8, 0}) < 1e-12);
    CHECK(std::abs(c[1]) < 1e-12);
    CHECK(std::abs(c[2] - Cplx{2, 0}) < 1e-12);
}

TEST_CASE("two dimensional Newton") {
    BiPoly f1 = z1().pow(2) - BiPoly(gr(2));
    BiPoly f2 = z2() - BiPoly(gr(1));
    PointPair z{Cplx{1.5, 0.1}, Cplx{0.5, -0.2}};
    REQUIRE(newton2(f1, f2, z));
    CHECK(std::abs(z[0] - Cplx{std::sqrt(2.0), 0}) < 1e-10);
    CHECK(std::abs(z[1] - Cplx{1, 0}) < 1e-10);
}

TEST_CASE("Levenberg-Marquardt on a smooth least squares problem") {
    LMProblem prob;
    prob.n = 2;
    prob.m = 2;
    prob.eval = [](const std::vector<double>& x, std::vector<double>& r,
                   std::vector<double>& J) {
        r[0] = x[0] - 3.0;
        r[1] = (x[1] + 1.0) * (x[1] + 1.0) + (x[1] + 1.0);
        J[0] = 1.0;
        J[1] = 0.0;
        J[2] = 0.0;
        J[3] = 2.0 * (x[1] + 1.0) + 1.0;
    };
    std::vector<double> x{0.0, 0.0};
    CHECK(levenberg_marquardt(prob, x, 1e-10));
    CHECK(std::abs(x[0] - 3.0) < 1e-8);
    CHECK(std::abs(x[1] + 1.0) < 1e-6);
}

TEST_CASE("random_disc stays in the disc") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) CHECK(std::abs(random_disc(rng, 2.5)) <= 2.5 + 1e-12);
}
