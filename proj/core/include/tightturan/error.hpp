#pragma once

#include <stdexcept>
#include <string>

namespace tightturan {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotATightTree,
  PreconditionFailed,
  NotRPartite,
  CodegreeTooLow,
  ImproperColoring,
  BelowThreshold,
  InvariantViolation,
  Unsupported,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tightturan
