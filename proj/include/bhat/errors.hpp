#pragma once

#include <stdexcept>
#include <string>

namespace bhat {

enum class ErrorKind {
  DimensionMismatch,
  ParseError,
  NotMPrimary,
  TruncationInsufficient,
  ZeroDivisorInput,
  FitUnstable,
  ConsistencyFailure,
  SamplingExhausted,
  SuperficialityNotObserved,
  InternalIdentityFailure,
  StabilizationNotReached,
  AlphaMismatch,
  CrossCheckFailure,
  WindowInconclusive,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries one of the kinds above so that
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bhat
