#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeroloc {

/// Failure categories raised by the library. The CLI maps each kind onto an
/// exit code through error_category().
enum class ErrorKind {
  ZeroLeadingCoefficient,
  NonpositiveFactor,
  DegenerateConstantPair,
  NonfiniteValue,
  Overflow,
  PoleAtInput,
  OriginInput,
  SingularInput,
  NoConvergence,
  NewtonDiverged,
  SingularRadius,
  DegenerateMonotonicity,
  UnresolvedJump,
  AmbiguousCase,
  EmptyZeroList,
  BadOrder,
  ChainViolation,
  PropertyViolation,
  NonPrimitiveMu,
  ZeroSum,
  TrustRadiusExceeded,
  SchemaError,
};

enum class ErrorCategory { Input, Numerical };

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::NonpositiveFactor: return "NonpositiveFactor";
    case ErrorKind::DegenerateConstantPair: return "DegenerateConstantPair";
    case ErrorKind::NonfiniteValue: return "NonfiniteValue";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::PoleAtInput: return "PoleAtInput";
    case ErrorKind::OriginInput: return "OriginInput";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::SingularRadius: return "SingularRadius";
    case ErrorKind::DegenerateMonotonicity: return "DegenerateMonotonicity";
    case ErrorKind::UnresolvedJump: return "UnresolvedJump";
    case ErrorKind::AmbiguousCase: return "AmbiguousCase";
    case ErrorKind::EmptyZeroList: return "EmptyZeroList";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::NonPrimitiveMu: return "NonPrimitiveMu";
    case ErrorKind::ZeroSum: return "ZeroSum";
    case ErrorKind::TrustRadiusExceeded: return "TrustRadiusExceeded";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

constexpr ErrorCategory error_category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroLeadingCoefficient:
    case ErrorKind::NonpositiveFactor:
    case ErrorKind::DegenerateConstantPair:
    case ErrorKind::NonfiniteValue:
    case ErrorKind::PoleAtInput:
    case ErrorKind::OriginInput:
    case ErrorKind::SingularInput:
    case ErrorKind::SingularRadius:
    case ErrorKind::DegenerateMonotonicity:
    case ErrorKind::AmbiguousCase:
    case ErrorKind::EmptyZeroList:
    case ErrorKind::BadOrder:
    case ErrorKind::NonPrimitiveMu:
    case ErrorKind::TrustRadiusExceeded:
    case ErrorKind::SchemaError:
      return ErrorCategory::Input;
    default:
      return ErrorCategory::Numerical;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace zeroloc
