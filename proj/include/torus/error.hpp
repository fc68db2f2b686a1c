#pragma once

#include <stdexcept>
#include <string>

namespace torus {

enum class ErrorKind {
  ParseError,
  InvariantViolation,
  IdenticallyZero,
  DegreeTooSmall,
  CommonComponent,
  CornerPoint,
  DegenerateContinuum,
  ConstantTermNonzero,
  DegenerateDenominator,
  StartOnCriticalPoint,
  TangencyEncountered,
  GradientFloorHit,
  MaxCrossingsExceeded,
  CornerEncountered,
  NonSewingCrossing,
  ClosureFailed,
  StepLimitExceeded,
  WordMismatch,
  ExtraEdgeIncidence,
  BoundViolation,
};

const char* to_string(ErrorKind kind);

// POSIX exit code used by the CLI: 1 parse/invariant, 2 geometric precondition,
// 3 bound violation.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torus
