#include "polyhull/polyhedron.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "test_util.hpp"

using namespace polyhull;
using namespace polyhull::testutil;

namespace {

PolyhedronSpec ex_symmetric() { return {z1() + z2(), z1() * z2()}; }

PolyhedronSpec ex_weighted() {
    return {z1().scaled(gr(2)) + z2().pow(2), z1() - z2().pow(2)};
}

PolyhedronSpec ex_degenerate() { return {z1() + z2().pow(2), z1() - z2().pow(2)}; }

PolyhedronSpec bidisc() { return {z1(), z2()}; }

bool has_point_near(const std::vector<PointPair>& pts, Cplx a, Cplx b, double tol = 1e-8) {
    for (const auto& p : pts) {
        if (std::abs(p[0] - a) < tol && std::abs(p[1] - b) < tol) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("non-degeneracy verdicts") {
    SUBCASE("symmetric pair passes") {
        CheckReport r = check_nondegeneracy(ex_symmetric(), 200, 1e-8, 42);
        CHECK(r.verdict == Verdict::Pass);
        REQUIRE(r.observed_min.has_value());
        // min |z1 - z2| over Gamma is sqrt(3), attained on the sampled grid
        CHECK(*r.observed_min == doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));
    }
    SUBCASE("weighted pair passes") {
        CheckReport r = check_nondegeneracy(ex_weighted(), 200, 1e-8, 42);
        CHECK(r.verdict == Verdict::Pass);
        REQUIRE(r.observed_min.has_value());
        // |W| = 6|z2| and 3 z2^2 = e^{i theta} - 2 e^{i phi}: min 6/sqrt(3)
        CHECK(*r.observed_min == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-6));
    }
    SUBCASE("equal moduli coefficients fail on z2 = 0") {
        CheckReport r = check_nondegeneracy(ex_degenerate(), 200, 1e-8, 42);
        CHECK(r.verdict == Verdict::Fail);
        REQUIRE(!r.witnesses.empty());
        const Witness& w = r.witnesses.front();
        CHECK(std::abs(w.point[1]) < 1e-6);
        CHECK(std::abs(std::abs(w.point[0]) - 1.0) < 1e-6);
        CHECK(w.residual <= 1e-8);
    }
    SUBCASE("bidisc is exactly non-degenerate") {
        CheckReport r = check_nondegeneracy(bidisc(), 50, 1e-8, 42);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.method == Method::Exact);
    }
}

TEST_CASE("properness verdicts") {
    SUBCASE("homogeneous pass") {
        CheckReport r = check_properness(ex_symmetric());
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.method == Method::Exact);
    }
    SUBCASE("shared zero line fails") {
        CheckReport r = check_properness({z1(), z1()});
        CHECK(r.verdict == Verdict::Fail);
        REQUIRE(!r.witnesses.empty());
        CHECK(std::abs(r.witnesses.front().point[0]) < 1e-12);
    }
    SUBCASE("power-substitution structure passes") {
        CheckReport r = check_properness(ex_weighted());
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.method == Method::Exact);
    }
    SUBCASE("affine shift of the bidisc passes") {
        CheckReport r = check_properness({z1() + BiPoly(gr(1)), z2()});
        CHECK(r.verdict == Verdict::Pass);
    }
    SUBCASE("entangled top forms are inconclusive") {
        CheckReport r = check_properness({z1() * z2() + z2(), z1() * z2() + z1()});
        CHECK(r.verdict == Verdict::Inconclusive);
    }
}

TEST_CASE("contractibility for homogeneous pairs") {
    CHECK(check_contractible_homogeneous(ex_symmetric()).verdict == Verdict::Pass);
    CHECK(check_contractible_homogeneous({z1() + BiPoly(gr(1)), z2()}).verdict ==
          Verdict::Inconclusive);
    CHECK(check_contractible_homogeneous({z1().pow(2), z2().pow(3)}).verdict == Verdict::Pass);
}

TEST_CASE("leaf hypothesis is an assertion, not a theorem") {
    CheckReport r = leaf_assertion_report();
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(!r.name.empty());
    CHECK(!r.note.empty());
}

TEST_CASE("torus fibers") {
    SUBCASE("bidisc corner") {
        TorusFiber f = solve_fiber(bidisc(), 0.0, 0.0, 7);
        REQUIRE(f.roots.size() == 1);
        CHECK(std::abs(f.roots[0][0] - Cplx{1, 0}) < 1e-10);
        CHECK(std::abs(f.roots[0][1] - Cplx{1, 0}) < 1e-10);
        CHECK(f.residuals[0] <= 1e-10);
    }
    SUBCASE("symmetric pair has the two conjugate roots") {
        TorusFiber f = solve_fiber(ex_symmetric(), 0.0, 0.0, 7);
        REQUIRE(f.roots.size() == 2);
        double c = 0.5, s = std::sqrt(3.0) / 2.0;
        CHECK(has_point_near(f.roots, {c, s}, {c, -s}));
        CHECK(has_point_near(f.roots, {c, -s}, {c, s}));
        for (double r : f.residuals) CHECK(r <= 1e-10);
    }
    SUBCASE("weighted pair at opposite torus arguments") {
        TorusFiber f = solve_fiber(ex_weighted(), 0.0, std::numbers::pi, 7);
        REQUIRE(f.roots.size() == 2);
        CHECK(has_point_near(f.roots, {0, 0}, {1, 0}));
        CHECK(has_point_near(f.roots, {0, 0}, {-1, 0}));
        for (double r : f.residuals) CHECK(r <= 1e-10);
    }
}

TEST_CASE("gamma sampling") {
    SUBCASE("bidisc lattice") {
        GammaCloud g = sample_gamma(bidisc(), 4, 4, 3);
        CHECK(g.points.size() == 16);
        CHECK(g.dropped == 0);
        CHECK(g.failed_fibers == 0);
        for (double r : g.residuals) CHECK(r <= 1e-8);
        CHECK(has_point_near(g.points, {1, 0}, {1, 0}));
        CHECK(has_point_near(g.points, {0, 1}, {0, 1}));
    }
    SUBCASE("two points per generic fiber") {
        GammaCloud g = sample_gamma(ex_symmetric(), 8, 8, 3);
        CHECK(g.points.size() == 128);
        for (size_t k = 0; k < g.points.size(); ++k) {
            const auto& p = g.points[k];
            CHECK(std::abs(std::abs(ex_symmetric().p1.evaluate(p[0], p[1])) - 1.0) <= 1e-8);
            CHECK(std::abs(std::abs(ex_symmetric().p2.evaluate(p[0], p[1])) - 1.0) <= 1e-8);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        GammaCloud a = sample_gamma(ex_symmetric(), 5, 5, 11);
        GammaCloud b = sample_gamma(ex_symmetric(), 5, 5, 11);
        REQUIRE(a.points.size() == b.points.size());
        for (size_t k = 0; k < a.points.size(); ++k) {
            CHECK(a.points[k][0] == b.points[k][0]);
            CHECK(a.points[k][1] == b.points[k][1]);
        }
    }
    SUBCASE("empty grid is rejected") {
        CHECK_THROWS_AS(sample_gamma(bidisc(), 0, 4, 3), std::invalid_argument);
    }
}

TEST_CASE("gamma CSV export") {
    GammaCloud g = sample_gamma(bidisc(), 2, 2, 3);
    std::ostringstream os;
    write_gamma_csv(os, g);
    std::string text = os.str();
    CHECK(text.rfind("re_z1,im_z1,re_z2,im_z2,theta,phi,residual\n", 0) == 0);
    size_t lines = 0;
    for (char ch : text) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 1 + g.points.size());
}
