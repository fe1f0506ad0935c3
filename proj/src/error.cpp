#include "transit/error.hpp"

namespace transit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidEpsilon: return "invalid-epsilon";
    case ErrorCode::InvalidIndex: return "invalid-index";
    case ErrorCode::InvalidPoint: return "invalid-point";
    case ErrorCode::InvalidWord: return "invalid-word";
    case ErrorCode::HorizonExceeded: return "horizon-error";
    case ErrorCode::MetricViolation: return "metric-violation";
    case ErrorCode::InvalidMap: return "invalid-map";
    case ErrorCode::InvalidSequence: return "invalid-sequence";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownVariant: return "unknown-variant";
    case ErrorCode::PerfectSpaceRequired: return "perfect-space-required";
    case ErrorCode::DegenerateTopology: return "degenerate-topology";
    case ErrorCode::NotSurjective: return "not-surjective";
    case ErrorCode::MapsDoNotCommute: return "maps-do-not-commute";
    case ErrorCode::PiNotSurjective: return "pi-not-surjective";
    case ErrorCode::InvalidMorphism: return "invalid-morphism";
    case ErrorCode::BackendMismatch: return "backend-mismatch";
    case ErrorCode::ClosureExceedsBound: return "closure-exceeds-bound";
    case ErrorCode::PreconditionViolated: return "precondition-violated";
    case ErrorCode::UnknownCommand: return "unknown-command";
    case ErrorCode::FlagConflict: return "flag-conflict";
    case ErrorCode::TooLarge: return "too-large";
  }
  return "unknown-error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace transit
