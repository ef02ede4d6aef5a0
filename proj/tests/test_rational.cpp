#include <doctest.h>

#include <sstream>

#include "riordan/rational.hpp"

using riordan::Rational;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).num() == -1);
    CHECK(Rational(-2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);  // denominator stays positive
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), riordan::Error);
}

TEST_CASE("arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), riordan::Error);
    CHECK(riordan::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(riordan::abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("comparisons and printing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    std::ostringstream os;
    os << Rational(-7, 3) << " " << Rational(4);
    CHECK(os.str() == "-7/3 4");
}

TEST_CASE("string parsing") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS_AS(Rational::from_string("1/0"), riordan::Error);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), riordan::Error);
    CHECK_THROWS_AS(Rational::from_string("abc"), riordan::Error);
    CHECK_THROWS_AS(Rational::from_string("1/"), riordan::Error);
    CHECK_THROWS_AS(Rational::from_string(""), riordan::Error);
}

TEST_CASE("exact square roots") {
    CHECK(Rational(9, 4).sqrt().value() == Rational(3, 2));
    CHECK(Rational(0).sqrt().value() == Rational(0));
    CHECK(Rational(1).sqrt().value() == Rational(1));
    CHECK_FALSE(Rational(2).sqrt().has_value());
    CHECK_FALSE(Rational(-1).sqrt().has_value());
    CHECK_FALSE(Rational(4, 3).sqrt().has_value());
    // big perfect square
    const Rational big = riordan::pow(Rational(123456789), 2);
    CHECK(big.sqrt().value() == Rational(123456789));
}
