#include "ccc/common_cause.hpp"

#include <string>

#include "ccc/errors.hpp"

namespace ccc {

std::string_view to_string(Mode mode) {
  return mode == Mode::strict ? "strict" : "lenient";
}

Mode parse_mode(std::string_view text) {
  if (text == "strict") return Mode::strict;
  if (text == "lenient") return Mode::lenient;
  throw ParseError("mode must be 'strict' or 'lenient', got '" + std::string(text) + "'", 0);
}

Rational covariance(const Event& a, const Event& b) {
  return measure(meet(a, b)) - measure(a) * measure(b);
}

Rational conditional(const Event& a, const Event& c) {
  const Rational pc = measure(c);
  if (pc == 0) {
    throw ZeroConditioningEvent("conditional probability undefined: p(c) = 0");
  }
  return measure(meet(a, c)) / pc;
}

Rational target_measure(const Event& a, const Event& b) {
  const Rational cov = covariance(a, b);
  if (cov <= 0) {
    throw NotPositivelyCorrelated("cov(a,b) = " + format_rational(cov) +
                                  " is not positive");
  }
  // cov > 0 forces p(a) < 1 and p(b) < 1, so the denominator
  // (1-p(a))(1-p(b)) + cov is strictly positive.
  const Rational denom = 1 + measure(meet(a, b)) - measure(a) - measure(b);
  return cov / denom;
}

Event carve_subevent(const Event& e, const Rational& v) {
  if (v <= 0 || v > measure(e)) {
    throw InvalidTarget("target measure " + format_rational(v) +
                        " outside (0, measure(e)] with measure(e) = " +
                        format_rational(measure(e)));
  }
  std::vector<Interval> out;
  Rational remaining = v;
  for (const Interval& iv : e.intervals()) {
    const Rational len = iv.length();
    if (remaining >= len) {
      out.push_back(iv);
      remaining -= len;
      if (remaining == 0) break;
    } else {
      out.push_back({iv.left, iv.left + remaining});
      break;
    }
  }
  return Event(std::move(out));
}

RccpReport verify_rccp(const Event& a, const Event& b, const Event& c) {
  const Rational pc = measure(c);
  if (pc == 0 || pc == 1) {
    throw ZeroConditioningEvent("verify_rccp needs 0 < p(c) < 1, got p(c) = " +
                                format_rational(pc));
  }
  const Event cprime = complement(c);
  const Event ab = meet(a, b);

  RccpReport r;
  r.p_a_given_c = conditional(a, c);
  r.p_b_given_c = conditional(b, c);
  r.p_ab_given_c = conditional(ab, c);
  r.p_a_given_cprime = conditional(a, cprime);
  r.p_b_given_cprime = conditional(b, cprime);
  r.p_ab_given_cprime = conditional(ab, cprime);
  r.rccp1 = r.p_ab_given_c == r.p_a_given_c * r.p_b_given_c;
  r.rccp2 = r.p_ab_given_cprime == r.p_a_given_cprime * r.p_b_given_cprime;
  r.rccp3 = r.p_a_given_c > r.p_a_given_cprime;
  r.rccp4 = r.p_b_given_c > r.p_b_given_cprime;
  return r;
}

Certificate find_common_cause(const Event& a, const Event& b, Mode mode) {
  if (a == b) {
    throw InvalidParameters("common cause requires distinct events a and b");
  }
  const Rational cov = covariance(a, b);
  if (cov <= 0) {
    throw NotPositivelyCorrelated("cov(a,b) = " + format_rational(cov) +
                                  " is not positive");
  }
  const Rational v = target_measure(a, b);
  const Event c = carve_subevent(meet(a, b), v);
  const RccpReport report = verify_rccp(a, b, c);
  if (!report.all()) {
    throw InternalInvariantViolation(
        "carved event of target measure failed an RCCP condition");
  }
  const bool distinct = c != a && c != b;
  if (mode == Mode::strict && !distinct) {
    throw DegenerateDistinctness("carved common cause equals " +
                                 std::string(c == a ? "a" : "b"));
  }
  return Certificate{a, b, c, cov, v, report, distinct, mode};
}

}  // namespace ccc
