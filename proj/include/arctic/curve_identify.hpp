#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arctic/golden.hpp"
#include "arctic/parametric_curve.hpp"
#include "arctic/poly_builder.hpp"
#include "arctic/resultants.hpp"
#include "arctic/xy_poly.hpp"

namespace arctic {

enum class Classification { Arctic, Spurious };
std::string to_string(Classification c);

struct ComponentVerdict {
  Real x;
  Real y;
  /// Midpoint of the nearest root pair. Meaningless when at_infinity is set.
  Complex double_root;
  bool at_infinity = false;
  bool is_real = false;
  /// |t| ≥ v₀, closed at the boundary; infinity belongs to the interval.
  bool in_interval = false;
  Classification classification = Classification::Spurious;
  /// Distance between the two clustered roots.
  Real gap;
};

/// Locates the double root of P(x, y; t) and applies the localisation rule:
/// arctic iff the double root is real with |t| ≥ v₀.
ComponentVerdict classify_point(const TPoly& p, const Real& x, const Real& y, const PoleSystem& poles);

using PlanePoint = std::pair<Real, Real>;

struct CurveFit {
  /// Largest-magnitude coefficient equal to 1.
  XYPoly curve;
  int degree = 0;
  Real residual;
  /// Normalised residual of every degree tried, in order.
  std::vector<std::pair<int, Real>> attempts;
};

/// Lowest-degree implicit curve through the points: for g = min_degree, … the
/// smallest singular direction of the monomial design matrix, accepted once
/// its normalised residual drops below `tol` (default 2^(−7·bits/8)).
/// Residuals of too-low degrees shrink geometrically on a short arc, so the
/// default sits close to the sample accuracy.
CurveFit fit_minimal_curve(const std::vector<PlanePoint>& points, int max_degree, int precision_bits,
                           std::optional<Real> tol = std::nullopt, int min_degree = 2);
CurveFit fit_minimal_curve(const CurvePortion& samples, int max_degree, int precision_bits,
                           std::optional<Real> tol = std::nullopt, int min_degree = 2);

struct RationalEntry {
  int i = 0;
  int j = 0;
  Real value;  // after normalisation
  bool ok = false;
  ExactValue exact;
  Real residual;  // |value − exact|
};

struct RationalizationTable {
  int reference_i = 0;
  int reference_j = 0;
  /// The curve was divided by this coefficient before reconstruction.
  Real normalization;
  /// lcm of the recovered denominators (0 when some entry failed or it overflowed).
  std::int64_t common_denominator = 0;
  std::vector<RationalEntry> entries;
  bool all_ok() const;
  /// Entries multiplied through by the common denominator.
  std::vector<ExactCoefficient> integer_table() const;
};

/// Recognises every coefficient as (p + q√D)/s with |p|, |q|, s ≤ `height`,
/// D taken from `radicands` (rational values are always tried first). The
/// curve is first scaled so its x^deg coefficient is 1.
RationalizationTable rationalize_coefficients(const XYPoly& curve, const std::vector<std::int64_t>& radicands,
                                              int precision_bits, std::int64_t height = 1000000000);

struct GoldenRow {
  int i = 0;
  int j = 0;
  ExactValue expected;
  Real expected_value;
  Real got;
  Real deviation;
};

struct SpuriousCheck {
  Real point_error;  // distance of the located point to the printed point
  Complex double_root;
  Real root_error;  // distance of the double root to the printed root
  bool classified_spurious = false;
  Real factor_deviation;  // computed cofactor vs the printed factor
  Real square_identity_deviation;  // printed factor vs its sum-of-squares form
  bool positive_elsewhere = false;
};

struct GoldenComparison {
  std::string name;
  std::vector<GoldenRow> rows;  // fitted curve vs the fixture
  Real max_deviation;
  /// Surface vs the fixture, when the surface is the curve itself.
  std::optional<Real> surface_max_deviation;
  std::vector<SpuriousCheck> spurious;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct CurveOptions {
  /// Fitting samples; raised to the minimum the degree bound needs.
  int samples = 0;
  std::optional<int> max_degree;
  std::optional<Real> fit_tolerance;
  /// Ceiling for the adaptive fitting precision (0: eight times the model's).
  int max_fit_bits = 0;
  bool compute_surface = true;
  /// Skip the full surface above this deg P (the line restriction still runs).
  int surface_max_deg_p = 12;
  /// Independent interior samples used for residuals and classification.
  int check_samples = 50;
};

struct CurveReport {
  int n = 0;
  int d = 0;
  std::string lambda;
  int precision_bits = 0;
  Real kappa;
  Real varkappa;
  std::vector<std::string> coincidences;

  TPoly p;
  DegreeReport degrees;

  std::optional<DiscriminantSurface> surface;
  int surface_degree = -1;  // -1 when neither the surface nor its line restriction ran
  int line_degree = -1;

  CurveFit fit;
  int sample_count = 0;
  int fit_bits = 0;  // precision the accepted fit ran at
  Real fit_on_curve_max;      // |curve(X, Y)| over the check samples
  Real surface_on_curve_max;  // |Υ(X, Y)| / ‖Υ‖ over the check samples
  std::optional<Real> division_remainder;  // ‖Υ − curve·cofactor‖ / ‖Υ‖
  Real symmetry_deviation;

  /// Points found by the diagonal search plus one representative sample.
  std::vector<ComponentVerdict> components;
  int samples_checked = 0;
  int samples_arctic = 0;

  std::optional<GoldenComparison> golden;
  bool component_structure_verified = false;
  std::vector<std::string> warnings;
};

CurveReport run_pipeline(const ModelParams& params, const CurveOptions& options = {});

/// Full pipeline plus the fixture comparison; GoldenMismatch on failure.
CurveReport verify_golden(const GoldenCase& golden, int precision_bits = kDefaultPrecisionBits);

/// Fixture comparison on an existing report (no throw).
GoldenComparison compare_with_golden(const CurveReport& report, const GoldenCase& golden);

/// Real points (s, s) where Υ restricted to the diagonal vanishes in [0, 1].
std::vector<Real> diagonal_zeros(const XYPoly& surface, int precision_bits);

}  // namespace arctic
