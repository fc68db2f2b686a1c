#include "torus/error.hpp"

namespace torus {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IdenticallyZero: return "IdenticallyZero";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::CommonComponent: return "CommonComponent";
    case ErrorKind::CornerPoint: return "CornerPoint";
    case ErrorKind::DegenerateContinuum: return "DegenerateContinuum";
    case ErrorKind::ConstantTermNonzero: return "ConstantTermNonzero";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::StartOnCriticalPoint: return "StartOnCriticalPoint";
    case ErrorKind::TangencyEncountered: return "TangencyEncountered";
    case ErrorKind::GradientFloorHit: return "GradientFloorHit";
    case ErrorKind::MaxCrossingsExceeded: return "MaxCrossingsExceeded";
    case ErrorKind::CornerEncountered: return "CornerEncountered";
    case ErrorKind::NonSewingCrossing: return "NonSewingCrossing";
    case ErrorKind::ClosureFailed: return "ClosureFailed";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::WordMismatch: return "WordMismatch";
    case ErrorKind::ExtraEdgeIncidence: return "ExtraEdgeIncidence";
    case ErrorKind::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvariantViolation:
    case ErrorKind::ConstantTermNonzero:
    case ErrorKind::DegreeTooSmall:
      return 1;
    case ErrorKind::BoundViolation:
      return 3;
    default:
      return 2;
  }
}

}  // namespace torus
