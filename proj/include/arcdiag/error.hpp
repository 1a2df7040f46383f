#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcdiag {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  UnknownVertex,
  DuplicateVertex,
  InvalidDrawing,
  CoincidentDirections,
  NoAngles,
  OddL,
  MissingRotation,
  InvalidColoring,
  DegenerateChord,
  ZeroVector,
  DomainError,
  TooManyColors,
  ZeroResolutionDrawing,
  BoundViolation,
  PerturbationFailed,
  BadParams,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arcdiag
