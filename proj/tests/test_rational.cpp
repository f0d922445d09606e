#include <doctest.h>

#include "veering/rational.hpp"

using veering::Rational;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((-a).num() == -1);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational(-5, 15).str() == "-1/3");
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(veering::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
}

TEST_CASE("rational overflow is a hard error, not wraparound") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, veering::InternalError);
    // Reduction keeps representable values representable.
    Rational x(INT64_MAX - 1, 2), y(2, INT64_MAX - 1);
    CHECK(x * y == Rational(1));
}
