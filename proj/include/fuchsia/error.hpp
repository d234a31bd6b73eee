#pragma once

#include <stdexcept>
#include <string>

namespace fuchsia {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveDeterminant,
  NotHyperbolic,
  IdentityHasAllPoints,
  CoincidentEndpoints,
  OverlappingCircles,
  IndexOutOfRange,
  InsufficientData,
  UnknownType,
  InvalidWindow,
  BudgetExceeded,
  EmptyViewport,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fuchsia
