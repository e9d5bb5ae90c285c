#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalcove/rational.hpp"

using qalcove::Rational;

TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(1, 2) <= Rational(2, 4));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("rendering in lowest terms") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("division by zero rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
