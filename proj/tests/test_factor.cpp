#include <doctest.h>

#include <cstdlib>
#include <random>

#include "polyhull/factor.hpp"
#include "test_util.hpp"

using namespace polyhull;
using testutil::c;
using testutil::gr;
using testutil::gri;
using testutil::random_nonzero_poly;
using testutil::same_factor_set;
using testutil::z1;
using testutil::z2;

static UniPoly up(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> v;
    for (long k : coeffs) v.emplace_back(k);
    return UniPoly(std::move(v));
}

TEST_CASE("univariate factorization over Q(i)") {
    // x^2 - 1
    auto f = factor_univariate(up({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(((f[0].first == up({-1, 1}) && f[1].first == up({1, 1})) ||
           (f[0].first == up({1, 1}) && f[1].first == up({-1, 1}))));

    // x^2 + 1 splits over Q(i) into (x - i)(x + i)
    auto g = factor_univariate(up({1, 0, 1}));
    REQUIRE(g.size() == 2);
    for (const auto& [p, m] : g) {
        CHECK(m == 1);
        CHECK(p.degree() == 1);
        CHECK(p.coeff(0).is_imaginary());
    }

    // x^2 - x + 1: roots exp(+-i pi/3) are not Gaussian rational
    auto h = factor_univariate(up({1, -1, 1}));
    REQUIRE(h.size() == 1);
    CHECK(h[0].first == up({1, -1, 1}));
    CHECK(h[0].second == 1);

    // multiplicities: (x-1)^2 (x+2)
    auto k = factor_univariate(up({-1, 1}) * up({-1, 1}) * up({2, 1}));
    REQUIRE(k.size() == 2);
    for (const auto& [p, m] : k) {
        if (p == up({-1, 1})) CHECK(m == 2);
        else {
            CHECK(p == up({2, 1}));
            CHECK(m == 1);
        }
    }

    // rational and Gaussian roots with non-unit leading coefficient:
    // 6(x - 1/2)(x + i/3)
    UniPoly a = (UniPoly::x() - UniPoly(gr(1, 2))) * (UniPoly::x() + UniPoly(gri(0, 1, 1, 3)));
    auto fa = factor_univariate(a.scaled(gr(6)));
    REQUIRE(fa.size() == 2);
    UniPoly rebuilt(gr(1));
    for (const auto& [p, m] : fa) {
        CHECK(m == 1);
        CHECK(p.lc() == gr(1));
        for (int j = 0; j < m; ++j) rebuilt = rebuilt * p;
    }
    CHECK(rebuilt == a.monic());

    // x^3 - 1 = (x - 1)(x^2 + x + 1)
    auto cube = factor_univariate(up({-1, 0, 0, 1}));
    REQUIRE(cube.size() == 2);
    bool saw_linear = false, saw_quad = false;
    for (const auto& [p, m] : cube) {
        if (p == up({-1, 1})) saw_linear = true;
        if (p == up({1, 1, 1})) saw_quad = true;
    }
    CHECK(saw_linear);
    CHECK(saw_quad);
}

TEST_CASE("bivariate factorization: fixture oracles") {
    BiPoly p1 = z1() + z2(), p2 = z1() * z2();
    BiPoly N1 = (p1 + p2) * (p1 - p2) * (z2() - z1());
    FactorList f1 = factor_irreducible(N1);
    CHECK(f1.reconstruct() == N1);
    CHECK(f1.unit == gr(1));
    CHECK(same_factor_set(f1, {z1() * z2() + z1() + z2(), z1() * z2() - z1() - z2(),
                               z1() - z2()}));
    for (const auto& fac : f1.factors) CHECK(fac.multiplicity == 1);

    // (z1 + 2 z2^2)(3 z1)(-6 z2): unit -36 with monic factors
    BiPoly N3 = (z1() + c(2) * z2() * z2()) * (c(3) * z1()) * (c(-6) * z2());
    FactorList f3 = factor_irreducible(N3);
    CHECK(f3.reconstruct() == N3);
    CHECK(f3.unit == gr(-36));
    CHECK(same_factor_set(f3, {z1(), z2(), z2() * z2() + c(1, 2) * z1()}));

    FactorList f2 = factor_irreducible(z1() * z1() - z2() * z2());
    CHECK(same_factor_set(f2, {z1() - z2(), z1() + z2()}));
}

TEST_CASE("bivariate factorization: structure cases") {
    // multiplicities
    FactorList f = factor_irreducible((z1() + z2()).pow(3) * (z1() - z2()));
    REQUIRE(f.factors.size() == 2);
    for (const auto& fac : f.factors) {
        if (fac.poly == z1() + z2()) CHECK(fac.multiplicity == 3);
        else {
            CHECK(fac.poly == z1() - z2());
            CHECK(fac.multiplicity == 1);
        }
    }
    CHECK(f.reconstruct() == (z1() + z2()).pow(3) * (z1() - z2()));

    // irreducible inputs come back whole
    FactorList g = factor_irreducible(z1() * z2() - c(1));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].poly == z1() * z2() - c(1));

    FactorList conic = factor_irreducible(z1() * z1() + z2() * z2() + c(1));
    REQUIRE(conic.factors.size() == 1);

    // splits over Q(i): z1^2 + z2^2 = (z1 + i z2)(z1 - i z2)
    FactorList gauss = factor_irreducible(z1() * z1() + z2() * z2());
    BiPoly iz2 = BiPoly(GaussianRational::i()) * z2();
    CHECK(same_factor_set(gauss, {z1() + iz2, z1() - iz2}));

    // irreducible over Q(i) though split over C: z1^2 - 2 z2^2
    FactorList rt2 = factor_irreducible(z1() * z1() - c(2) * z2() * z2());
    REQUIRE(rt2.factors.size() == 1);
    CHECK(rt2.factors[0].poly == z1() * z1() - c(2) * z2() * z2());

    // pure content in one variable
    FactorList uni = factor_irreducible(z2() * z2() - c(1));
    CHECK(same_factor_set(uni, {z2() - c(1), z2() + c(1)}));

    // constants
    FactorList k = factor_irreducible(c(-7, 2));
    CHECK(k.factors.empty());
    CHECK(k.unit == gr(-7, 2));

    CHECK_THROWS_AS(factor_irreducible((z1() + z2()).pow(17)), DegreeTooLarge);
}

TEST_CASE("factorization round-trip on random products") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 120; ++t) {
        BiPoly prod = c(1);
        int k = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j) prod = prod * random_nonzero_poly(rng, 3, 2);
        if (prod.total_degree() > factorization_degree_cap()) continue;
        FactorList f = factor_irreducible(prod);
        CHECK(f.reconstruct() == prod);
        for (size_t a = 0; a < f.factors.size(); ++a) {
            CHECK(f.factors[a].poly.leading_coefficient() == gr(1));
            for (size_t b = 0; b < f.factors.size(); ++b) {
                if (a == b) continue;
                CHECK_FALSE(f.factors[a].poly.try_divide(f.factors[b].poly).has_value());
            }
        }
    }
}
