#include "polyhull/parse.hpp"

#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace polyhull;
using namespace polyhull::testutil;

TEST_CASE("basic expressions") {
    CHECK(parse_polynomial("z1 + z2") == z1() + z2());
    CHECK(parse_polynomial("2*z1 + z2^2") == z1().scaled(gr(2)) + z2().pow(2));
    BiPoly expected = BiPoly::monomial({1, 2}, gri(1, 2, 3, 1)) - BiPoly(GaussianRational::i());
    CHECK(parse_polynomial("(1/2 + 3i)*z1*z2^2 - i") == expected);
    CHECK(parse_polynomial("  z1+z2  ") == z1() + z2());
    CHECK(parse_polynomial("z1\t*\nz2") == z1() * z2());
}

TEST_CASE("implicit multiplication and precedence") {
    CHECK(parse_polynomial("2z1") == z1().scaled(gr(2)));
    CHECK(parse_polynomial("3i") == BiPoly(gri(0, 1, 3, 1)));
    CHECK(parse_polynomial("z1z2") == z1() * z2());
    CHECK(parse_polynomial("2*z1^2") == z1().pow(2).scaled(gr(2)));
    CHECK(parse_polynomial("(z1+z2)^2") == (z1() + z2()).pow(2));
    CHECK(parse_polynomial("-z1^2") == -z1().pow(2));
    CHECK(parse_polynomial("1/2z1") == z1().scaled(gr(1, 2)));
    CHECK(parse_polynomial("3 - -2") == BiPoly(gr(5)));
    CHECK(parse_polynomial("-2") == BiPoly(gr(-2)));
    CHECK(parse_polynomial("i*i") == BiPoly(gr(-1)));
}

TEST_CASE("alphabets") {
    CHECK(parse_polynomial("w1 + 2*w2") ==
          BiPoly::variable(1) + BiPoly::variable(2).scaled(gr(2)));
    CHECK(polynomial_alphabet("z1") == 'z');
    CHECK(polynomial_alphabet("w2^3") == 'w');
    CHECK(polynomial_alphabet("3+i") == 0);
    CHECK_THROWS_AS(parse_polynomial("z1 + w2"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z3"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1^-1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(z1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1)"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1 $ z2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1^2^3"), ParseError);
    try {
        parse_polynomial("z1 + $");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("render and re-parse round trip") {
    std::mt19937_64 rng(20260819);
    for (int iter = 0; iter < 1000; ++iter) {
        BiPoly f = random_poly(rng);
        CHECK(parse_polynomial(f.str()) == f);
        CHECK(parse_polynomial(f.str("w1", "w2")) == f);
    }
}
