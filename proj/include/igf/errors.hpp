#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace igf {

enum class ErrorCode {
  EmptyInput,
  NegativeProbability,
  ProbabilityAboveOne,
  SumNotOne,
  SumExceedsOne,
  LengthMismatch,
  NonPositiveUtility,
  TruncationRequired,
  InvalidParameter,
  AllZeroProbabilities,
  ParseError,
  Domain,
};

/// Base of every error raised by the library. `code()` identifies the
/// violated rule; the message carries the offending value where there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input: bad distributions, utilities, parameters or files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the region where the requested quantity is defined
/// (t below 1 without the extended domain, 0 raised to a non-positive power,
/// a divergent zeta argument).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::Domain, message) {}
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::ProbabilityAboveOne: return "ProbabilityAboveOne";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::SumExceedsOne: return "SumExceedsOne";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositiveUtility: return "NonPositiveUtility";
    case ErrorCode::TruncationRequired: return "TruncationRequired";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::AllZeroProbabilities: return "AllZeroProbabilities";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Domain: return "DomainError";
  }
  return "Unknown";
}

}  // namespace igf
