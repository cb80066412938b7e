#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padicpow {

enum class ErrorCode {
  NotPrime,
  NotEisenstein,
  NotIrreducibleModP,
  MixedTowerUnsupported,
  InvalidField,
  KTooLargeForMemory,
  ZeroArgument,
  ZeroPolynomial,
  NotSquareFree,
  DegreeTooSmall,
  PreconditionRootInRing,
  PreconditionNotPowerFree,
  PreconditionRootInField,
  PreconditionNotMember,
  ScanBudgetExceeded,
  MTooSmall,
  LiftObstruction,
  ArtinCountViolation,
  ParseError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotEisenstein: return "NotEisenstein";
    case ErrorCode::NotIrreducibleModP: return "NotIrreducibleModP";
    case ErrorCode::MixedTowerUnsupported: return "MixedTowerUnsupported";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::KTooLargeForMemory: return "KTooLargeForMemory";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::PreconditionRootInRing: return "PreconditionRootInRing";
    case ErrorCode::PreconditionNotPowerFree: return "PreconditionNotPowerFree";
    case ErrorCode::PreconditionRootInField: return "PreconditionRootInField";
    case ErrorCode::PreconditionNotMember: return "PreconditionNotMember";
    case ErrorCode::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::LiftObstruction: return "LiftObstruction";
    case ErrorCode::ArtinCountViolation: return "ArtinCountViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padicpow
