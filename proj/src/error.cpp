#include "marsrank/error.hpp"

namespace marsrank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::TooFewMethods: return "TooFewMethods";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::UnsupportedAlpha: return "UnsupportedAlpha";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::MissingMode: return "MissingMode";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace marsrank
