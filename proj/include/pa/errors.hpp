#pragma once

#include <stdexcept>
#include <string>

namespace pa {

/// Error categories shared across the library. The CLI maps these to exit
/// codes: input errors -> 1, verification errors -> 2, budget -> 3.
enum class ErrorCode {
  // input
  Cycle,
  UnknownElement,
  DuplicateId,
  EmptyResult,
  BadSize,
  UnknownFacet,
  UnknownNode,
  NotABuildingSet,
  LabelClash,
  ParseError,
  // verification
  NotATube,
  ComponentNotTube,
  NoSuchFace,
  ValidationFailed,
  LabelMismatch,
  // resource
  BudgetExceeded,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

  /// true for malformed-input errors (CLI exit 1)
  bool is_input_error() const {
    switch (code_) {
      case ErrorCode::Cycle:
      case ErrorCode::UnknownElement:
      case ErrorCode::DuplicateId:
      case ErrorCode::EmptyResult:
      case ErrorCode::BadSize:
      case ErrorCode::UnknownFacet:
      case ErrorCode::UnknownNode:
      case ErrorCode::NotABuildingSet:
      case ErrorCode::LabelClash:
      case ErrorCode::ParseError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace pa
