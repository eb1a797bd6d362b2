#include <doctest.h>

#include <stdexcept>

#include "dglpp/rational.hpp"

using dglpp::Integer;
using dglpp::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, -8).str() == "-1/2");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(Integer(10L), Integer(-15L)).str() == "-2/3");
    CHECK(Rational(3, 4).denominator() == Integer(4L));
    CHECK(Rational(3, 4).numerator() == Integer(3L));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("19/36") == Rational(19, 36));
    CHECK(Rational::parse("-2/7") == Rational(-2, 7));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // Mixed magnitudes stay exact.
    Rational big = Rational(1, 3).pow(40);
    CHECK((big + Rational(1)) - Rational(1) == big);
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-1, 2) < Rational(1, 1000000));
}

TEST_CASE("integer helpers") {
    CHECK(Integer::binomial(4, 2) == Integer(6L));
    CHECK(Integer::binomial(25, 4) == Integer(12650L));
    CHECK(Integer::factorial(6) == Integer(720L));
    CHECK(Integer(12L).lcm(Integer(18L)) == Integer(36L));
    CHECK(Integer(36L).div_exact(Integer(12L)) == Integer(3L));
    CHECK(Integer(-5L).pow(3) == Integer(-125L));
    CHECK(Integer::parse("-123456789012345678901234567890").str() ==
          "-123456789012345678901234567890");
    CHECK_THROWS_AS(Integer::parse("12x"), std::invalid_argument);
}
