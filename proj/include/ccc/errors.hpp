#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccc {

/// Stable error discriminants, used by the CLI to map failures to exit codes.
enum class errc {
  parse_error,
  endpoint_out_of_range,
  zero_conditioning_event,
  not_positively_correlated,
  invalid_target,
  degenerate_distinctness,
  internal_invariant_violation,
  atom_cap_exceeded,
  index_out_of_range,
  invalid_parameters,
  block_out_of_range,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

/// Malformed text input. `position` is the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(errc::parse_error, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class EndpointOutOfRange : public Error {
public:
  explicit EndpointOutOfRange(const std::string& what)
      : Error(errc::endpoint_out_of_range, what) {}
};

/// Conditioning event has measure 0 (or 1 where the complement is also needed).
class ZeroConditioningEvent : public Error {
public:
  explicit ZeroConditioningEvent(const std::string& what)
      : Error(errc::zero_conditioning_event, what) {}
};

class NotPositivelyCorrelated : public Error {
public:
  explicit NotPositivelyCorrelated(const std::string& what)
      : Error(errc::not_positively_correlated, what) {}
};

class InvalidTarget : public Error {
public:
  explicit InvalidTarget(const std::string& what) : Error(errc::invalid_target, what) {}
};

/// Strict mode only: the forced common cause coincides with one of the inputs.
class DegenerateDistinctness : public Error {
public:
  explicit DegenerateDistinctness(const std::string& what)
      : Error(errc::degenerate_distinctness, what) {}
};

/// A condition that is mathematically guaranteed failed anyway; always a bug.
class InternalInvariantViolation : public Error {
public:
  explicit InternalInvariantViolation(const std::string& what)
      : Error(errc::internal_invariant_violation, what) {}
};

class AtomCapExceeded : public Error {
public:
  explicit AtomCapExceeded(const std::string& what) : Error(errc::atom_cap_exceeded, what) {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string& what) : Error(errc::index_out_of_range, what) {}
};

class InvalidParameters : public Error {
public:
  explicit InvalidParameters(const std::string& what)
      : Error(errc::invalid_parameters, what) {}
};

class BlockOutOfRange : public Error {
public:
  explicit BlockOutOfRange(const std::string& what) : Error(errc::block_out_of_range, what) {}
};

}  // namespace ccc
