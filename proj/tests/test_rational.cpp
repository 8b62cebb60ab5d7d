#include <doctest.h>

#include "avgord/rational.hpp"

using avgord::DomainError;
using avgord::OverflowError;
using avgord::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(211, 60).num() == 211);
  CHECK(Rational(211, 60).den() == 60);
  CHECK(Rational(501, 120) == Rational(167, 40));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(211, 60) * Rational(43, 7) == Rational(9073, 420));
  CHECK(Rational(1477, 180) - Rational(8, 3) == Rational(997, 180));
  CHECK(Rational(3) * Rational(997, 180) == Rational(997, 60));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2) - Rational(1, 60) == Rational(119, 60));
  CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
}

TEST_CASE("comparisons cross-multiply exactly") {
  CHECK(Rational(13, 6) < Rational(311, 100));
  CHECK(Rational(311, 100) < Rational(211, 60));
  CHECK(Rational(211, 60) < Rational(71, 20));
  CHECK(Rational(211, 60) <= Rational(211, 60));
  CHECK_FALSE(Rational(211, 60) < Rational(211, 60));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  // near the boundary: 4/15 vs 16/60 are the same number
  CHECK(Rational(16, 60) == Rational(4, 15));
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big * big, OverflowError);
  CHECK_THROWS_AS(big + big, OverflowError);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(Rational(211, 60).decimal(6) == "3.516667");
  CHECK(Rational(7, 2).decimal(6) == "3.500000");
  CHECK(Rational(1, 8).decimal(2) == "0.12");  // 0.125 ties to even
  CHECK(Rational(3, 8).decimal(2) == "0.38");  // 0.375 ties to even
  CHECK(Rational(-7, 2).decimal(1) == "-3.5");
  CHECK(Rational(5).decimal(0) == "5");
}

TEST_CASE("str and parse round-trip") {
  CHECK(Rational(211, 60).str() == "211/60");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("211/60") == Rational(211, 60));
  CHECK(Rational::parse("-2/3") == Rational(-2, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x/y"), DomainError);
}
