#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arctic {

enum class ErrorKind {
  // input errors
  NotCoprime,
  RegimeViolation,
  BadPrecision,
  BadInput,
  // numeric failures
  DegenerateDenominator,
  PoleHit,
  SingularSystem,
  PoleAtInfinity,
  DegreeOverflow,
  DegreeBoundViolated,
  ZeroLeadingCoefficient,
  IllConditionedInterpolation,
  LeadingCoefficientVanishesOnGrid,
  PivotBreakdown,
  NoDoubleRoot,
  NoFitWithinBound,
  // verification
  GoldenMismatch,
};

std::string_view to_string(ErrorKind kind);

/// CLI exit code for an error kind: 2 input, 3 numeric, 4 golden mismatch.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arctic
