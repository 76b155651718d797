#pragma once

#include <string>
#include <vector>

#include "arctic/model_params.hpp"

namespace arctic {

/// f(ζ) = x·A(ζ) + y·B(ζ) + C(ζ) together with the ζ-derivatives of the
/// three coefficient functions.
struct FCoefficients {
  Real a, b, c;
  Real da, db, dc;
  /// Largest magnitude of the individual terms, used to scale residuals.
  Real scale;
};

FCoefficients f_coefficients(const ModelParams& params, const Real& zeta);

Real eval_f(const Real& x, const Real& y, const ModelParams& params, const Real& zeta);
Real eval_f_prime(const Real& x, const Real& y, const ModelParams& params, const Real& zeta);
/// The same function in the symmetric variable φ = ζ − ϰ.
Real eval_g(const Real& x, const Real& y, const ModelParams& params, const Real& phi);

struct ParamPoint {
  Real zeta;
  Real phi;
  Real x;
  Real y;
  /// |f| and |f′| at (x, y) relative to the largest term; zero for the
  /// inserted contact points.
  Real residual_f;
  Real residual_fprime;
};

enum class PortionLabel { NW, NE, SE, SW };
std::string to_string(PortionLabel label);

struct CurvePortion {
  PortionLabel label = PortionLabel::NW;
  std::vector<ParamPoint> points;
  /// Set on portions built from NW by the reflection / crossing-symmetry
  /// construction, which is an assumption rather than a derived result.
  bool from_symmetry_assumption = false;
  std::vector<std::string> warnings;
};

/// Solves f = 0, f′ = 0 for (x, y) at an interior ζ.
ParamPoint solve_point(const ModelParams& params, const Real& zeta);

/// `count` points of Γ_NW on a Chebyshev grid in ζ; the two end points are the
/// contact points (κ, 0) and (0, κ).
CurvePortion sample_portion(const ModelParams& params, int count);

/// NW, NE, SE, SW portions. SE is NW reflected through (1/2, 1/2); NE and SW
/// reflect the NW portion of the crossing-symmetric model λ → π − λ.
std::vector<CurvePortion> complete_curve(const CurvePortion& portion, const ModelParams& params);

/// Empirical monotonicity of Γ_NW along ζ: x non-increasing, y non-decreasing.
bool is_monotone(const CurvePortion& portion);

}  // namespace arctic
