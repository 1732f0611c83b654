#pragma once

#include <string>
#include <string_view>

#include "ccc/common_cause.hpp"

namespace ccc {

/// Serializes a certificate to its JSON wire form: events as canonical event
/// strings, every numeric field as a reduced-fraction string, the four flags
/// under "rccp". Field order is fixed, so equal certificates serialize to
/// byte-identical text.
std::string certificate_to_json(const Certificate& cert);

/// Inverse of certificate_to_json. Throws ParseError on malformed JSON or on
/// field values that fail their grammar.
Certificate certificate_from_json(std::string_view json);

}  // namespace ccc
