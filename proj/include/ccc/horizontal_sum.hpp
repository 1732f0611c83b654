#pragma once

#include <string>
#include <string_view>

#include "ccc/common_cause.hpp"
#include "ccc/event.hpp"

namespace ccc {

/// Element of a horizontal sum (0-1 pasting) of interval-algebra blocks.
/// The blocks share only their bottom and top; everything else lives in
/// exactly one block. Block elements are always proper: the empty and unit
/// events normalize to Zero and One, which belong to no particular block.
class HSElement {
public:
  enum class Kind { zero, one, block };

  HSElement() : kind_(Kind::zero) {}

  static HSElement zero() { return HSElement(); }
  static HSElement one() {
    HSElement x;
    x.kind_ = Kind::one;
    return x;
  }

  /// Wraps a block event, normalizing improper ones. Throws
  /// InvalidParameters for a negative block index; the index is checked
  /// against the block count by HSLogic operations.
  static HSElement block(int block, Event event);

  Kind kind() const { return kind_; }
  bool is_proper() const { return kind_ == Kind::block; }

  /// Block index / block event of a proper element. Throws
  /// InvalidParameters on Zero or One.
  int block_index() const;
  const Event& block_event() const;

  friend bool operator==(const HSElement&, const HSElement&) = default;

private:
  Kind kind_;
  int block_ = 0;
  Event event_;
};

/// "0", "1", or "B<i>:<event>" with the usual event grammar.
std::string format_hs_element(const HSElement& x);

/// A blockwise certificate: the underlying interval-algebra certificate
/// together with the block everything lives in.
struct HsCertificate {
  int block = 0;
  Certificate certificate;

  HSElement cause() const { return HSElement::block(block, certificate.c); }

  friend bool operator==(const HsCertificate&, const HsCertificate&) = default;
};

/// The horizontal sum of `block_count` copies of the interval algebra, as an
/// orthomodular lattice with the finitely additive state that restricts to
/// Lebesgue measure on each block. Elements of distinct blocks meet at Zero
/// and join at One.
class HSLogic {
public:
  explicit HSLogic(int block_count);

  int block_count() const { return block_count_; }

  HSElement meet(const HSElement& x, const HSElement& y) const;
  HSElement join(const HSElement& x, const HSElement& y) const;
  HSElement orthocomplement(const HSElement& x) const;
  bool leq(const HSElement& x, const HSElement& y) const;

  /// Zero -> 0, One -> 1, Block(i,e) -> measure(e).
  Rational state(const HSElement& x) const;

  /// state(meet(x,y)) - state(x) * state(y). Strictly negative for proper
  /// elements of distinct blocks.
  Rational covariance(const HSElement& x, const HSElement& y) const;

  /// Delegates to find_common_cause on the block events when x and y share a
  /// block; any other pair is not positively correlated, so the finder
  /// throws NotPositivelyCorrelated. DegenerateDistinctness propagates from
  /// the delegation in strict mode.
  HsCertificate find_common_cause(const HSElement& x, const HSElement& y, Mode mode) const;

  /// Parses an element and validates its block index against block_count().
  HSElement parse_element(std::string_view text) const;

private:
  void check_member(const HSElement& x) const;

  int block_count_;
};

}  // namespace ccc
