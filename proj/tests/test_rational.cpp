#include <doctest.h>

#include "psitoda/rational.hpp"
#include "testutil.hpp"

using namespace psitoda;

TEST_CASE("rational invariants: reduced form, positive denominator") {
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(-2, 5).pow(3) == Rational(-8, 125));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("string form round-trips losslessly") {
    testutil::Rng rng(42);
    for (int k = 0; k < 200; ++k) {
        Rational r = testutil::rand_rational(rng, 1000000, 99999);
        CHECK(Rational::from_string(r.str()) == r);
    }
    CHECK(Rational::from_string("-21/14") == Rational(-3, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK_THROWS_AS(Rational::from_string("1/x"), DomainError);
    CHECK_THROWS_AS(Rational::from_string(""), DomainError);
    CHECK_THROWS_AS(Rational::from_string("3/0"), DomainError);
}

TEST_CASE("big values stay exact") {
    Rational big = Rational(1, 3).pow(50);
    CHECK(big * Rational(3).pow(50) == Rational(1));
    CHECK(Rational::from_string(big.str()) == big);
}
