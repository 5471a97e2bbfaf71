#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace marsrank {

enum class ErrorCode {
  MalformedInput,
  TooFewMethods,
  EmptyMatrix,
  NonFiniteValue,
  DomainError,
  UnsupportedK,
  UnsupportedAlpha,
  DegenerateInput,
  UnknownScenario,
  MissingMode,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Recoverable failure caused by the caller's input. The CLI maps these to exit 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// An internal postcondition did not hold. The CLI maps these to exit 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace marsrank
