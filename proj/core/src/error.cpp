#include "numsg/error.hpp"

namespace numsg {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::GeneratorTooLarge: return "GeneratorTooLarge";
    case ErrorCode::Gcd: return "GcdError";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::EvenB: return "EvenB";
    case ErrorCode::BNotInS: return "BNotInS";
    case ErrorCode::IdealSumViolation: return "IdealSumViolation";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::EllTooSmall: return "EllTooSmall";
    case ErrorCode::ExcludedEll: return "ExcludedEll";
    case ErrorCode::LevelTooSmall: return "LevelTooSmall";
    case ErrorCode::ExcludedLevel: return "ExcludedLevel";
    case ErrorCode::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotStabilized:
    case ErrorCode::EllTooSmall:
    case ErrorCode::ExcludedEll:
    case ErrorCode::LevelTooSmall:
    case ErrorCode::ExcludedLevel:
    case ErrorCode::TrivialSemigroup:
      return ErrorCategory::Domain;
    case ErrorCode::InvariantViolation:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Input;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::InvariantViolation, what);
}

}  // namespace numsg
