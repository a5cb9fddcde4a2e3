#include "hessfano/error.hpp"

namespace hessfano {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::TooShort: return "TooShort";
  case ErrorKind::NotIncreasing: return "NotIncreasing";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::BadBand: return "BadBand";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::LengthMismatch: return "LengthMismatch";
  case ErrorKind::SizeMismatch: return "SizeMismatch";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::NotNef: return "NotNef";
  case ErrorKind::NotRestrictable: return "NotRestrictable";
  case ErrorKind::NotCase2: return "NotCase2";
  case ErrorKind::NotCase2b: return "NotCase2b";
  case ErrorKind::NonDominantWeight: return "NonDominantWeight";
  case ErrorKind::NotComparable: return "NotComparable";
  case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  case ErrorKind::NonTermination: return "NonTermination";
  case ErrorKind::CertificateFailure: return "CertificateFailure";
  case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind)
{
  return kind == ErrorKind::NonTermination || kind == ErrorKind::CertificateFailure ||
         kind == ErrorKind::InvariantViolation;
}

} // namespace hessfano
