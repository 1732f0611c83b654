#include "ccc/horizontal_sum.hpp"

#include <cctype>

#include "ccc/errors.hpp"

namespace ccc {

HSElement HSElement::block(int block, Event event) {
  if (block < 0) {
    throw InvalidParameters("block index must be non-negative");
  }
  if (event.is_zero()) return zero();
  if (event.is_unit()) return one();
  HSElement x;
  x.kind_ = Kind::block;
  x.block_ = block;
  x.event_ = std::move(event);
  return x;
}

int HSElement::block_index() const {
  if (kind_ != Kind::block) {
    throw InvalidParameters("Zero/One carry no block index");
  }
  return block_;
}

const Event& HSElement::block_event() const {
  if (kind_ != Kind::block) {
    throw InvalidParameters("Zero/One carry no block event");
  }
  return event_;
}

std::string format_hs_element(const HSElement& x) {
  switch (x.kind()) {
    case HSElement::Kind::zero: return "0";
    case HSElement::Kind::one: return "1";
    case HSElement::Kind::block:
      return "B" + std::to_string(x.block_index()) + ":" + format_event(x.block_event());
  }
  return {};
}

HSLogic::HSLogic(int block_count) : block_count_(block_count) {
  if (block_count < 1) {
    throw InvalidParameters("horizontal sum needs at least one block");
  }
}

void HSLogic::check_member(const HSElement& x) const {
  if (x.is_proper() && x.block_index() >= block_count_) {
    throw BlockOutOfRange("block " + std::to_string(x.block_index()) +
                          " outside logic with " + std::to_string(block_count_) +
                          " blocks");
  }
}

HSElement HSLogic::meet(const HSElement& x, const HSElement& y) const {
  check_member(x);
  check_member(y);
  using Kind = HSElement::Kind;
  if (x.kind() == Kind::zero || y.kind() == Kind::zero) return HSElement::zero();
  if (x.kind() == Kind::one) return y;
  if (y.kind() == Kind::one) return x;
  if (x.block_index() != y.block_index()) return HSElement::zero();
  return HSElement::block(x.block_index(), ccc::meet(x.block_event(), y.block_event()));
}

HSElement HSLogic::join(const HSElement& x, const HSElement& y) const {
  check_member(x);
  check_member(y);
  using Kind = HSElement::Kind;
  if (x.kind() == Kind::one || y.kind() == Kind::one) return HSElement::one();
  if (x.kind() == Kind::zero) return y;
  if (y.kind() == Kind::zero) return x;
  if (x.block_index() != y.block_index()) return HSElement::one();
  return HSElement::block(x.block_index(), ccc::join(x.block_event(), y.block_event()));
}

HSElement HSLogic::orthocomplement(const HSElement& x) const {
  check_member(x);
  switch (x.kind()) {
    case HSElement::Kind::zero: return HSElement::one();
    case HSElement::Kind::one: return HSElement::zero();
    case HSElement::Kind::block:
      return HSElement::block(x.block_index(), complement(x.block_event()));
  }
  return HSElement::zero();
}

bool HSLogic::leq(const HSElement& x, const HSElement& y) const {
  check_member(x);
  check_member(y);
  using Kind = HSElement::Kind;
  if (x.kind() == Kind::zero || y.kind() == Kind::one) return true;
  if (x.kind() == Kind::one || y.kind() == Kind::zero) return false;
  return x.block_index() == y.block_index() && ccc::leq(x.block_event(), y.block_event());
}

Rational HSLogic::state(const HSElement& x) const {
  check_member(x);
  switch (x.kind()) {
    case HSElement::Kind::zero: return Rational{0};
    case HSElement::Kind::one: return Rational{1};
    case HSElement::Kind::block: return measure(x.block_event());
  }
  return Rational{0};
}

Rational HSLogic::covariance(const HSElement& x, const HSElement& y) const {
  return state(meet(x, y)) - state(x) * state(y);
}

HsCertificate HSLogic::find_common_cause(const HSElement& x, const HSElement& y,
                                         Mode mode) const {
  check_member(x);
  check_member(y);
  if (x.is_proper() && y.is_proper() && x.block_index() == y.block_index()) {
    return HsCertificate{x.block_index(),
                         ccc::find_common_cause(x.block_event(), y.block_event(), mode)};
  }
  // Cross-block meets are Zero and Zero/One are extreme, so covariance can
  // never be positive here.
  throw NotPositivelyCorrelated("cov(x,y) = " + format_rational(covariance(x, y)) +
                                " is not positive");
}

HSElement HSLogic::parse_element(std::string_view text) const {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(pos, end - pos);

  if (body == "0") return HSElement::zero();
  if (body == "1") return HSElement::one();
  if (body.empty() || body.front() != 'B') {
    throw ParseError("expected '0', '1' or 'B<i>:<event>'", pos);
  }
  const std::size_t colon = body.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected ':' after block index", pos + body.size());
  }
  const std::string_view index_text = body.substr(1, colon - 1);
  if (index_text.empty() || index_text.size() > 9 ||
      index_text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("malformed block index '" + std::string(index_text) + "'", pos + 1);
  }
  const long index = std::stol(std::string(index_text));
  if (index >= block_count_) {
    throw BlockOutOfRange("block " + std::to_string(index) + " outside logic with " +
                          std::to_string(block_count_) + " blocks");
  }
  const Event event = parse_event(body.substr(colon + 1));
  return HSElement::block(static_cast<int>(index), event);
}

}  // namespace ccc
