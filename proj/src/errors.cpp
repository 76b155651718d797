#include "arctic/errors.hpp"

namespace arctic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::BadPrecision: return "BadPrecision";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::PoleAtInfinity: return "PoleAtInfinity";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::IllConditionedInterpolation: return "IllConditionedInterpolation";
    case ErrorKind::LeadingCoefficientVanishesOnGrid: return "LeadingCoefficientVanishesOnGrid";
    case ErrorKind::PivotBreakdown: return "PivotBreakdown";
    case ErrorKind::NoDoubleRoot: return "NoDoubleRoot";
    case ErrorKind::NoFitWithinBound: return "NoFitWithinBound";
    case ErrorKind::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime:
    case ErrorKind::RegimeViolation:
    case ErrorKind::BadPrecision:
    case ErrorKind::BadInput:
      return 2;
    case ErrorKind::GoldenMismatch:
      return 4;
    default:
      return 3;
  }
}

}  // namespace arctic
