#pragma once

#include <string_view>

#include "ccc/event.hpp"
#include "ccc/rational.hpp"

namespace ccc {

/// The six conditional probabilities behind Reichenbach's screening-off
/// conditions, plus one flag per condition. All values are exact; the flags
/// are exact equalities/inequalities of rationals, never tolerances.
///
///   RCCP1: p(ab|c)  == p(a|c)  * p(b|c)
///   RCCP2: p(ab|c') == p(a|c') * p(b|c')
///   RCCP3: p(a|c) > p(a|c')
///   RCCP4: p(b|c) > p(b|c')
struct RccpReport {
  Rational p_a_given_c;
  Rational p_b_given_c;
  Rational p_ab_given_c;
  Rational p_a_given_cprime;
  Rational p_b_given_cprime;
  Rational p_ab_given_cprime;
  bool rccp1 = false;
  bool rccp2 = false;
  bool rccp3 = false;
  bool rccp4 = false;

  bool all() const { return rccp1 && rccp2 && rccp3 && rccp4; }

  friend bool operator==(const RccpReport&, const RccpReport&) = default;
};

/// Strict mode refuses a common cause equal to a or b; lenient mode returns
/// it with `distinct` cleared.
enum class Mode { strict, lenient };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// A found common cause together with every exact quantity witnessing it.
struct Certificate {
  Event a;
  Event b;
  Event c;
  Rational covariance;
  Rational target_measure;
  RccpReport report;
  bool distinct = false;
  Mode mode = Mode::lenient;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// cov(a,b) = p(a ∧ b) − p(a)·p(b).
Rational covariance(const Event& a, const Event& b);

/// p(a | c) = p(a ∧ c)/p(c). Throws ZeroConditioningEvent when p(c) = 0.
Rational conditional(const Event& a, const Event& c);

/// The measure any common cause inside a ∧ b must have:
///
///   v = (p(a ∧ b) − p(a)·p(b)) / (1 + p(a ∧ b) − p(a) − p(b))
///
/// Requires cov(a,b) > 0 (else NotPositivelyCorrelated); then 0 < v <= p(a ∧ b).
Rational target_measure(const Event& a, const Event& b);

/// Cuts a sub-event of exact measure v out of e, consuming the intervals of e
/// left to right and cutting the boundary interval (l,r] down to
/// (l, l + remainder]. Deterministic. Requires 0 < v <= measure(e), else
/// InvalidTarget.
Event carve_subevent(const Event& e, const Rational& v);

/// Evaluates all four conditions exactly. Requires 0 < p(c) < 1 so that both
/// p(.|c) and p(.|c') are defined; throws ZeroConditioningEvent otherwise.
RccpReport verify_rccp(const Event& a, const Event& b, const Event& c);

/// End-to-end finder: computes v = target_measure(a,b), carves
/// c = carve_subevent(meet(a,b), v), verifies RCCP1-4 and returns the full
/// certificate. Requires a != b (InvalidParameters) and cov(a,b) > 0
/// (NotPositivelyCorrelated). In strict mode a carved c equal to a or b is
/// rejected with DegenerateDistinctness; this happens exactly when a and b
/// are comparable. A false RCCP flag here is impossible and raises
/// InternalInvariantViolation.
Certificate find_common_cause(const Event& a, const Event& b, Mode mode);

}  // namespace ccc
