#pragma once

#include <stdexcept>
#include <string>

namespace soliton {

enum class ErrorCode {
  InvalidInput,
  SizeMismatch,
  NotReduced,
  NotBelow,
  NotDistinguished,
  ClassMismatch,
  NotLinearExtension,
  BadParameters,
  MalformedNecklace,
  MalformedGraph,
  InconsistentLabels,
  NonGeneric,
  BoundExceeded,
  Singular,
};

const char* error_name(ErrorCode code);

// Raised for every domain-level failure. `box` is the 1-based reading-order
// position of an offending box when one is known, otherwise 0.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what, int box = 0)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), box_(box) {}

  ErrorCode code() const { return code_; }
  int box() const { return box_; }

 private:
  ErrorCode code_;
  int box_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::NotReduced: return "NOT_REDUCED";
    case ErrorCode::NotBelow: return "NOT_BELOW";
    case ErrorCode::NotDistinguished: return "NOT_DISTINGUISHED";
    case ErrorCode::ClassMismatch: return "CLASS_MISMATCH";
    case ErrorCode::NotLinearExtension: return "NOT_LINEAR_EXTENSION";
    case ErrorCode::BadParameters: return "BAD_PARAMETERS";
    case ErrorCode::MalformedNecklace: return "MALFORMED_NECKLACE";
    case ErrorCode::MalformedGraph: return "MALFORMED_GRAPH";
    case ErrorCode::InconsistentLabels: return "INCONSISTENT_LABELS";
    case ErrorCode::NonGeneric: return "NON_GENERIC";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::Singular: return "SINGULAR";
  }
  return "UNKNOWN";
}

}  // namespace soliton
