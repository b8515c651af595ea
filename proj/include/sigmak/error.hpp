#pragma once

#include <stdexcept>
#include <string>

namespace sigmak {

enum class ErrorCode {
  ZeroPolynomial,
  DegreeTooLow,
  NoRealRoot,
  DimensionMismatch,
  BadSubsetSize,
  NotStableEquation,
  DenominatorNotPositive,
  SamplingExhausted,
  CriticalPoint,
  NotCertified,
  OutOfDeformationRange,
  ZeroCoordinate,
  NotOnLevelSet,
  NonPositiveConstant,
  HypothesisViolated,
  PhaseOutOfRange,
  DegeneratePhase,
  DegreeOutOfRange,
  TopCoefficientNotZero,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSubsetSize: return "BadSubsetSize";
    case ErrorCode::NotStableEquation: return "NotStableEquation";
    case ErrorCode::DenominatorNotPositive: return "DenominatorNotPositive";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::CriticalPoint: return "CriticalPoint";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::OutOfDeformationRange: return "OutOfDeformationRange";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::NotOnLevelSet: return "NotOnLevelSet";
    case ErrorCode::NonPositiveConstant: return "NonPositiveConstant";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PhaseOutOfRange: return "PhaseOutOfRange";
    case ErrorCode::DegeneratePhase: return "DegeneratePhase";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::TopCoefficientNotZero: return "TopCoefficientNotZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sigmak
