#include <doctest.h>

#include "cvgeo/rational.hpp"

using namespace cvgeo;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parsing fractions canonicalizes") {
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
}

TEST_CASE("parsing decimals is exact") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(parse_rational(".75") == Rational(3, 4));
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a/b"));
  CHECK_THROWS(parse_rational("1.2.3"));
}

TEST_CASE("double round trips") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.375) == Rational(-3, 8));
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0));
  const double x = 0.1; // not representable; conversion must still be exact
  CHECK(to_double(rational_from_double(x)) == x);
}

TEST_SUITE_END();
