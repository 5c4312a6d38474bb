// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace twomat {

enum class ErrorCode {
  ZeroPolynomial,
  DegreeZero,
  NoConvergence,
  CenterMismatch,
  DivisionByZeroSeries,
  ComposeValuation,
  SingularJacobian,
  ResidualTooLarge,
  WindowMiss,
  NonFinite,
  ParseError,
  NonSimpleBranchPoint,
  SheetCountMismatch,
  NearBranchPoint,
  CoincidentPoints,
  TruncationExhausted,
  BranchPointArgument,
  SheetIndexOutOfRange,
  BudgetExceeded,
  PartitionBudgetExceeded,
  NotHyperelliptic,
  InvalidArgument,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::ComposeValuation: return "ComposeValuation";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::WindowMiss: return "WindowMiss";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSimpleBranchPoint: return "NonSimpleBranchPoint";
    case ErrorCode::SheetCountMismatch: return "SheetCountMismatch";
    case ErrorCode::NearBranchPoint: return "NearBranchPoint";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::TruncationExhausted: return "TruncationExhausted";
    case ErrorCode::BranchPointArgument: return "BranchPointArgument";
    case ErrorCode::SheetIndexOutOfRange: return "SheetIndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PartitionBudgetExceeded: return "PartitionBudgetExceeded";
    case ErrorCode::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace twomat
