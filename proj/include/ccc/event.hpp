#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccc/rational.hpp"

namespace ccc {

/// The half-open interval (left, right]. Raw intervals may be degenerate
/// (left >= right); normalization into an Event drops those.
struct Interval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Element of the Boolean algebra of finite unions of rational subintervals
/// of (0,1], with Lebesgue measure.
///
/// Every Event is canonical: intervals sorted by left endpoint, pairwise
/// disjoint, non-adjacent (each right endpoint strictly below the next left
/// endpoint) and non-degenerate. Canonical form is unique, so two Events are
/// equal as point sets iff they compare equal structurally. The empty
/// sequence is the zero element; (0,1] is the unit.
class Event {
public:
  /// The zero element.
  Event() = default;

  /// Normalizes an arbitrary interval list: validates endpoints lie in [0,1],
  /// drops degenerate intervals, sorts, and merges overlapping and adjacent
  /// ones. Throws EndpointOutOfRange for endpoints outside [0,1].
  explicit Event(std::vector<Interval> raw);

  static Event unit();

  const std::vector<Interval>& intervals() const { return intervals_; }

  bool is_zero() const { return intervals_.empty(); }
  bool is_unit() const;

  friend bool operator==(const Event&, const Event&) = default;

private:
  std::vector<Interval> intervals_;
};

/// Canonicalizing constructor as a free function.
Event event_normalize(std::vector<Interval> raw);

/// Set intersection a ∧ b.
Event meet(const Event& a, const Event& b);

/// Set union a ∨ b.
Event join(const Event& a, const Event& b);

/// (0,1] \ a.
Event complement(const Event& a);

/// Order relation: a ≤ b, i.e. meet(a, b) == a.
bool leq(const Event& a, const Event& b);

/// Lebesgue measure: the exact sum of interval lengths. Always in [0,1].
Rational measure(const Event& a);

/// Parses the event grammar
///   event    := "0" | "1" | interval ( "+" interval )*
///   interval := "(" rational "," rational "]"
/// with whitespace permitted between tokens. "1" parses to (0,1]. Degenerate
/// intervals such as (1/2,1/4] normalize away. Throws ParseError on malformed
/// input and EndpointOutOfRange on endpoints outside [0,1].
Event parse_event(std::string_view text);

/// Canonical text form: reduced fractions, sorted intervals joined by "+",
/// no whitespace. The zero element prints "0", the unit prints "(0,1]".
/// parse_event(format_event(a)) == a for every Event.
std::string format_event(const Event& a);

}  // namespace ccc
