#pragma once

#include <stdexcept>
#include <string>

namespace locoh {

enum class ErrorCode {
  FieldMismatch,
  NotPrime,
  DivisionByZero,
  OutOfRange,
  NotHomogeneous,
  NotSquare,
  DimensionMismatch,
  Singular,
  Parse,
  VerificationFailed,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "field_mismatch";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::NotHomogeneous: return "not_homogeneous";
    case ErrorCode::NotSquare: return "not_square";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::VerificationFailed: return "verification_failed";
  }
  return "unknown";
}

/// Every failing precondition in the library throws this, tagged with a code
/// so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace locoh
