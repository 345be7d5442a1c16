#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class ErrorCode {
  // input errors
  Parse,
  EmptyGenerators,
  NonPositiveGenerator,
  GeneratorTooLarge,
  Gcd,
  NotMember,
  EvenB,
  BNotInS,
  IdealSumViolation,
  AmbientMismatch,
  InvalidArgument,
  UnknownFixture,
  // domain restrictions
  NotStabilized,
  EllTooSmall,
  ExcludedEll,
  LevelTooSmall,
  ExcludedLevel,
  TrivialSemigroup,
  // internal consistency failures
  InvariantViolation,
};

enum class ErrorCategory { Input, Domain, Internal };

std::string_view error_code_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

// Throws InvariantViolation with `what` when `condition` is false.
void ensure(bool condition, const std::string& what);

}  // namespace numsg
