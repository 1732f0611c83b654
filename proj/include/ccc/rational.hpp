#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ccc {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator and denominator.
/// Values are always stored reduced (gcd 1) with a positive denominator,
/// so equality of values is structural equality of the reduced forms.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den, moving the sign to the numerator.
/// Throws InvalidParameters when den == 0.
Rational make_rational(Int num, Int den);

/// Renders reduced form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Parses `integer` or `integer "/" posinteger` with an optional leading '-'.
/// No internal whitespace. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

namespace detail {
/// As parse_rational, but reports errors at `offset` + local position; used by
/// the event parser to keep positions relative to the full input line.
Rational parse_rational_token(std::string_view token, std::size_t offset);
}  // namespace detail

}  // namespace ccc
