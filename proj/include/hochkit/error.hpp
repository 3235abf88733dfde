#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hochkit {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  ShapeMismatch,
  NotAssociative,
  UnitLawFails,
  DegenerateFrobeniusForm,
  NotAGroup,
  NotAModule,
  AlgebraMismatch,
  MiddleNotSemisimple,
  MissingSerreData,
  MissingSimples,
  DegreeCapExceeded,
  NotACocycle,
  NotACycle,
  DegreeUnderflow,
  NotIntertwiner,
  SingularGram,
  RoutesDisagree,
  AugmentationNot1Dim,
  MissingAugmentation,
  ArityMismatch,
  NotWellDefined,
  InvariantViolation,
  NotFound,
  Usage,
};

inline std::string_view to_string(ErrorCode code);

/// Every failure surfaced by the library. The code identifies the
/// precondition or invariant that was violated; the message carries the
/// witness (indices, positions, offending values).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnitLawFails: return "UnitLawFails";
    case ErrorCode::DegenerateFrobeniusForm: return "DegenerateFrobeniusForm";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::MiddleNotSemisimple: return "MiddleNotSemisimple";
    case ErrorCode::MissingSerreData: return "MissingSerreData";
    case ErrorCode::MissingSimples: return "MissingSimples";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorCode::NotIntertwiner: return "NotIntertwiner";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::RoutesDisagree: return "RoutesDisagree";
    case ErrorCode::AugmentationNot1Dim: return "AugmentationNot1Dim";
    case ErrorCode::MissingAugmentation: return "MissingAugmentation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace hochkit
