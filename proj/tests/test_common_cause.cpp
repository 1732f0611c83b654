#include <doctest.h>

#include "ccc/certificate_json.hpp"
#include "ccc/common_cause.hpp"
#include "ccc/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ccc;
using namespace ccc::testing;

namespace {

Event ev(const char* text) { return parse_event(text); }

}  // namespace

TEST_CASE("covariance matches hand-computed values") {
  CHECK(covariance(ev("(0,1/2]"), ev("(1/4,5/8]")) == Rational(1, 16));
  CHECK(covariance(ev("(0,1/2]"), ev("(0,1/2]")) == Rational(1, 4));
  CHECK(covariance(ev("(0,1/4]"), ev("(1/2,3/4]")) == Rational(-1, 16));
}

TEST_CASE("covariance symmetry and complement identities") {
  SplitMix64 rng(0x5eed020);
  for (int i = 0; i < 150; ++i) {
    const Event a = random_event(rng);
    const Event b = random_event(rng);
    CHECK(covariance(a, b) == covariance(b, a));
    CHECK(covariance(a, complement(a)) == -measure(a) * measure(complement(a)));
    CHECK(covariance(a, complement(a)) <= 0);
    if (covariance(a, b) > 0) {
      CHECK(measure(a) < 1);
      CHECK(measure(b) < 1);
    }
  }
}

TEST_CASE("conditional probability is exact") {
  CHECK(conditional(ev("(0,1/2]"), ev("(1/4,3/4]")) == Rational(1, 2));
  const Event a = ev("(1/8,3/8]");
  CHECK(conditional(a, a) == 1);
  CHECK(conditional(Event{}, a) == 0);
  CHECK_THROWS_AS(conditional(a, Event{}), ZeroConditioningEvent);
}

TEST_CASE("target_measure matches the formula and its bounds") {
  CHECK(target_measure(ev("(0,1/2]"), ev("(1/4,5/8]")) == Rational(1, 6));
  CHECK(Rational(1, 6) <= measure(meet(ev("(0,1/2]"), ev("(1/4,5/8]"))));
  // Nested pair: v = p(a and b) = p(a).
  CHECK(target_measure(ev("(0,1/4]"), ev("(0,1/2]")) == Rational(1, 4));
  CHECK_THROWS_AS(target_measure(ev("(0,1/4]"), ev("(1/2,3/4]")), NotPositivelyCorrelated);
}

TEST_CASE("target_measure bounds hold on random positively correlated pairs") {
  SplitMix64 rng(0x5eed021);
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = random_positively_correlated_pair(rng);
    const Rational v = target_measure(a, b);
    CHECK(v > 0);
    CHECK(v <= measure(meet(a, b)));
  }
}

TEST_CASE("carve_subevent consumes left to right") {
  CHECK(carve_subevent(Event::unit(), Rational(1, 3)) == ev("(0,1/3]"));
  CHECK(carve_subevent(ev("(0,1/4]+(1/2,3/4]"), Rational(3, 8)) == ev("(0,1/4]+(1/2,5/8]"));
  const Event e = ev("(1/8,1/4]+(3/8,1/2]");
  CHECK(carve_subevent(e, measure(e)) == e);
}

TEST_CASE("carve_subevent validates the target") {
  const Event e = ev("(0,1/4]");
  CHECK_THROWS_AS(carve_subevent(e, Rational(0)), InvalidTarget);
  CHECK_THROWS_AS(carve_subevent(e, Rational(-1, 8)), InvalidTarget);
  CHECK_THROWS_AS(carve_subevent(e, Rational(3, 8)), InvalidTarget);
  CHECK_THROWS_AS(carve_subevent(Event{}, Rational(1, 8)), InvalidTarget);
}

TEST_CASE("carve_subevent soundness on random inputs") {
  SplitMix64 rng(0x5eed022);
  for (int i = 0; i < 200; ++i) {
    const Event e = random_proper_event(rng);
    const Rational v = measure(e) * random_unit_fraction(rng);
    const Event c = carve_subevent(e, v);
    REQUIRE(is_canonical(c));
    REQUIRE(leq(c, e));
    REQUIRE(measure(c) == v);
  }
}

TEST_CASE("verify_rccp: worked example with a target-measure cause") {
  const Event a = ev("(0,1/2]");
  const Event b = ev("(1/4,5/8]");
  const Event c = ev("(1/4,5/12]");
  const RccpReport r = verify_rccp(a, b, c);
  CHECK(r.p_a_given_c == 1);
  CHECK(r.p_b_given_c == 1);
  CHECK(r.p_ab_given_c == 1);
  CHECK(r.p_a_given_cprime == Rational(2, 5));
  CHECK(r.p_b_given_cprime == Rational(1, 4));
  CHECK(r.p_ab_given_cprime == Rational(1, 10));
  CHECK(r.p_ab_given_cprime == r.p_a_given_cprime * r.p_b_given_cprime);
  CHECK(r.all());
  CHECK(r == rccp_oracle(a, b, c));
}

TEST_CASE("verify_rccp: candidate disjoint from a and b fails RCCP3") {
  const Event a = ev("(0,1/2]");
  const Event b = ev("(1/4,5/8]");
  const Event c = ev("(3/4,1]");
  const RccpReport r = verify_rccp(a, b, c);
  CHECK(r.p_a_given_c == 0);
  CHECK_FALSE(r.rccp3);
  CHECK_FALSE(r.rccp4);
  CHECK_FALSE(r.all());
  CHECK(r == rccp_oracle(a, b, c));
}

TEST_CASE("verify_rccp rejects conditioning events of measure 0 or 1") {
  const Event a = ev("(0,1/2]");
  const Event b = ev("(1/4,5/8]");
  CHECK_THROWS_AS(verify_rccp(a, b, Event{}), ZeroConditioningEvent);
  CHECK_THROWS_AS(verify_rccp(a, b, Event::unit()), ZeroConditioningEvent);
}

TEST_CASE("c = meet(a,b) always fulfills RCCP1, RCCP3, RCCP4") {
  SplitMix64 rng(0x5eed023);
  for (int i = 0; i < 150; ++i) {
    const auto [a, b] = random_positively_correlated_pair(rng);
    const Event c = meet(a, b);
    REQUIRE(measure(c) > 0);  // forced by cov > 0
    const RccpReport r = verify_rccp(a, b, c);
    REQUIRE(r.rccp1);
    REQUIRE(r.rccp3);
    REQUIRE(r.rccp4);
  }
}

TEST_CASE("find_common_cause: worked example end to end") {
  const Certificate cert = find_common_cause(ev("(0,1/2]"), ev("(1/4,5/8]"), Mode::lenient);
  CHECK(cert.c == ev("(1/4,5/12]"));
  CHECK(cert.covariance == Rational(1, 16));
  CHECK(cert.target_measure == Rational(1, 6));
  CHECK(cert.distinct);
  CHECK(cert.report.all());
  CHECK(measure(cert.c) == cert.target_measure);
  CHECK(leq(cert.c, meet(cert.a, cert.b)));
  CHECK(cert.report == rccp_oracle(cert.a, cert.b, cert.c));
}

TEST_CASE("find_common_cause: nested pair forces c = a") {
  const Event a = ev("(0,1/4]");
  const Event b = ev("(0,1/2]");
  CHECK_THROWS_AS(find_common_cause(a, b, Mode::strict), DegenerateDistinctness);

  const Certificate cert = find_common_cause(a, b, Mode::lenient);
  CHECK(cert.c == a);
  CHECK(cert.target_measure == Rational(1, 4));
  CHECK_FALSE(cert.distinct);
  CHECK(cert.report.all());
  CHECK(cert.report == rccp_oracle(a, b, cert.c));
}

TEST_CASE("find_common_cause rejects bad pairs") {
  CHECK_THROWS_AS(find_common_cause(ev("(0,1/4]"), ev("(1/2,3/4]"), Mode::lenient),
                  NotPositivelyCorrelated);
  const Event a = ev("(0,1/2]");
  CHECK_THROWS_AS(find_common_cause(a, a, Mode::lenient), InvalidParameters);
  CHECK_THROWS_AS(find_common_cause(a, complement(a), Mode::strict),
                  NotPositivelyCorrelated);
}

TEST_CASE("find_common_cause certificates verify on random pairs") {
  SplitMix64 rng(0x5eed024);
  for (int i = 0; i < 150; ++i) {
    const auto [a, b] = random_positively_correlated_pair(rng);
    const Certificate cert = find_common_cause(a, b, Mode::lenient);
    REQUIRE(cert.report.all());
    REQUIRE(cert.report == rccp_oracle(a, b, cert.c));
    REQUIRE(measure(cert.c) == cert.target_measure);
    REQUIRE(leq(cert.c, meet(a, b)));
    REQUIRE(cert.distinct == (cert.c != a && cert.c != b));

    const bool comparable = meet(a, b) == a || meet(a, b) == b;
    if (comparable) {
      REQUIRE_THROWS_AS(find_common_cause(a, b, Mode::strict), DegenerateDistinctness);
    } else {
      REQUIRE(find_common_cause(a, b, Mode::strict).distinct);
    }
  }
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("strict") == Mode::strict);
  CHECK(parse_mode("lenient") == Mode::lenient);
  CHECK(to_string(Mode::strict) == "strict");
  CHECK_THROWS_AS(parse_mode("Strict"), ParseError);
}

TEST_CASE("certificate JSON round trip preserves every field") {
  const Certificate cert = find_common_cause(ev("(0,1/2]"), ev("(1/4,5/8]"), Mode::lenient);
  const std::string json = certificate_to_json(cert);
  CHECK(json.find("\"cov\":\"1/16\"") != std::string::npos);
  CHECK(json.find("\"v\":\"1/6\"") != std::string::npos);
  CHECK(json.find('.') == std::string::npos);  // no floating point anywhere
  CHECK(certificate_from_json(json) == cert);

  const Certificate nested = find_common_cause(ev("(0,1/4]"), ev("(0,1/2]"), Mode::lenient);
  CHECK(certificate_from_json(certificate_to_json(nested)) == nested);
}

TEST_CASE("certificate JSON rejects malformed input") {
  CHECK_THROWS_AS(certificate_from_json("not json"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("{\"a\":\"(0,1/2]\"}"), ParseError);
}
