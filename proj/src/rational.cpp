#include "ccc/rational.hpp"

#include <cctype>

#include "ccc/errors.hpp"

namespace ccc {

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw InvalidParameters("rational denominator must be nonzero");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

namespace detail {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational_token(std::string_view token, std::size_t offset) {
  if (token.empty()) {
    throw ParseError("expected a rational number", offset);
  }
  std::string_view num_part = token;
  std::string_view den_part;
  const std::size_t slash = token.find('/');
  if (slash != std::string_view::npos) {
    num_part = token.substr(0, slash);
    den_part = token.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) {
      throw ParseError("malformed rational '" + std::string(token) + "'", offset);
    }
  }

  bool negative = false;
  if (!num_part.empty() && num_part.front() == '-') {
    negative = true;
    num_part.remove_prefix(1);
  }
  if (!all_digits(num_part)) {
    throw ParseError("malformed rational '" + std::string(token) + "'", offset);
  }
  Int num{std::string(num_part)};
  if (negative) num = -num;

  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  if (!all_digits(den_part)) {
    throw ParseError("malformed rational '" + std::string(token) + "'", offset);
  }
  Int den{std::string(den_part)};
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(token) + "'", offset);
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace detail

Rational parse_rational(std::string_view text) {
  return detail::parse_rational_token(text, 0);
}

}  // namespace ccc
