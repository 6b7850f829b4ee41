#include <doctest.h>

#include "liesym/errors.hpp"
#include "liesym/rational.hpp"

using liesym::Rational;

TEST_SUITE("rational") {
  TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
  }

  TEST_CASE("field operations are exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    // a denominator that would overflow doubles stays exact
    Rational big(1);
    for (int i = 0; i < 200; ++i) big = big * Rational(1, 7);
    Rational back = big;
    for (int i = 0; i < 200; ++i) back = back * Rational(7);
    CHECK(back == Rational(1));
  }

  TEST_CASE("predicates and comparisons") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 3).abs() == Rational(2, 3));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  }

  TEST_CASE("string round trip") {
    CHECK(Rational::from_string("-7/3").to_string() == "-7/3");
    CHECK(Rational::from_string("4/2").to_string() == "2");
    CHECK(Rational::from_string("0").to_string() == "0");
    CHECK_THROWS_AS(Rational::from_string("1/0"), liesym::DomainError);
    CHECK_THROWS_AS(Rational::from_string("abc"), liesym::DomainError);
    CHECK_THROWS_AS(Rational(1, 0), liesym::DomainError);
  }

  TEST_CASE("factorial helper") {
    CHECK(liesym::factorial(0) == 1);
    CHECK(liesym::factorial(5) == 120);
    CHECK(liesym::factorial(20) == mpz_class("2432902008176640000"));
  }
}
