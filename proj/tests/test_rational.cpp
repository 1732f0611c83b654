#include <doctest.h>

#include "ccc/errors.hpp"
#include "ccc/rational.hpp"
#include "ccc/rng.hpp"

using namespace ccc;

namespace {

bool stored_reduced(const Rational& q) {
  return denominator(q) > 0 && gcd(abs(numerator(q)), denominator(q)) == 1;
}

}  // namespace

TEST_CASE("make_rational reduces and normalizes sign") {
  CHECK(make_rational(2, 4) == Rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(numerator(make_rational(1, -2)) == -1);
  CHECK(denominator(make_rational(1, -2)) == 2);
  CHECK(make_rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(make_rational(1, 0), InvalidParameters);
}

TEST_CASE("equality is structural equality of reduced forms") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("format_rational emits reduced fractions, integers without slash") {
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(1)) == "1");
  CHECK(format_rational(Rational(-1, 16)) == "-1/16");
  CHECK(format_rational(Rational(10, 5)) == "2");
}

TEST_CASE("parse_rational accepts the grammar and reduces") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/16") == Rational(-1, 16));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(format_rational(parse_rational("123456789012345678901234567890/2")) ==
        "61728394506172839450617283945");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1//2"), ParseError);
  CHECK_THROWS_AS(parse_rational("+3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 / 2"), ParseError);
}

TEST_CASE("arithmetic keeps values reduced with positive denominators") {
  SplitMix64 rng(0x5eed001);
  Rational acc(1, 3);
  for (int i = 0; i < 500; ++i) {
    const Rational q(static_cast<long long>(rng.below(41)) - 20,
                     1 + static_cast<long long>(rng.below(24)));
    switch (rng.below(4)) {
      case 0: acc += q; break;
      case 1: acc -= q; break;
      case 2: acc *= q; break;
      default:
        if (q != 0) acc /= q;
        break;
    }
    REQUIRE(stored_reduced(acc));
    REQUIRE(stored_reduced(q));
  }
}

TEST_CASE("round trip through text is the identity") {
  SplitMix64 rng(0x5eed002);
  for (int i = 0; i < 200; ++i) {
    const Rational q(static_cast<long long>(rng.below(2001)) - 1000,
                     1 + static_cast<long long>(rng.below(999)));
    CHECK(parse_rational(format_rational(q)) == q);
  }
}
