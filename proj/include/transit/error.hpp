#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transit {

enum class ErrorCode {
  InvalidEpsilon,
  InvalidIndex,
  InvalidPoint,
  InvalidWord,
  HorizonExceeded,
  MetricViolation,
  InvalidMap,
  InvalidSequence,
  ParseError,
  UnknownVariant,
  PerfectSpaceRequired,
  DegenerateTopology,
  NotSurjective,
  MapsDoNotCommute,
  PiNotSurjective,
  InvalidMorphism,
  BackendMismatch,
  ClosureExceedsBound,
  PreconditionViolated,
  UnknownCommand,
  FlagConflict,
  TooLarge,
};

// Kebab-case name used in diagnostics and reports, e.g. "invalid-epsilon".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace transit
