#pragma once

#include <stdexcept>
#include <string>

namespace tempered {

enum class Errc {
  DimensionMismatch,
  ZeroRoot,
  LengthMismatch,
  InvalidArgument,
  ParseError,
  ValidationError,
  UnknownDescriptor,
  NotStrictlyDominant,
  NondegeneracyViolation,
  NotDominant,
  NotGenuine,
  NonIntegralPairing,
  AmbiguousPositiveSystem,
  RangeError,
  DominanceFailure,
  InternalBijectionFailure,
  InternalInvariant,
};

const char* to_string(Errc code);

// Errors that indicate a violated theorem rather than bad input.
bool is_internal(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tempered
