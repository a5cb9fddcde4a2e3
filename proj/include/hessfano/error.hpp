#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hessfano {

enum class ErrorKind {
  // input validation
  TooShort,
  NotIncreasing,
  OutOfRange,
  Disconnected,
  BadBand,
  CapExceeded,
  IndexOutOfRange,
  LengthMismatch,
  SizeMismatch,
  ParseError,
  // precondition failures of the classification pipeline
  NotNef,
  NotRestrictable,
  NotCase2,
  NotCase2b,
  NonDominantWeight,
  NotComparable,
  SearchSpaceTooLarge,
  // internal invariant failures; these indicate a library bug
  NonTermination,
  CertificateFailure,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace hessfano
