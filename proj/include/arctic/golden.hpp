#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arctic/real.hpp"
#include "arctic/xy_poly.hpp"

namespace arctic {

/// (p + q·√radicand) / denominator with integer p, q.
struct ExactValue {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t radicand = 1;
  std::int64_t denominator = 1;

  Real value() const;
  std::string to_string() const;
};

struct ExactCoefficient {
  int i = 0;
  int j = 0;
  ExactValue value;
};

struct NamedConstant {
  std::string name;
  std::string expression;
};

/// weight · form², with the form written out term by term (no symmetry).
struct SquareTerm {
  ExactValue weight;
  std::vector<ExactCoefficient> form;
};

struct SpuriousComponent {
  std::string kind;  // "point"
  ExactValue x;
  ExactValue y;
  std::string double_root;  // e.g. "+-i"
  /// Defining factor of the component, symmetric pairs expanded.
  std::vector<ExactCoefficient> factor;
  /// Optional sum-of-squares rewriting of the factor.
  std::vector<SquareTerm> sum_of_squares;
};

/// One worked example with printed exact data. Coefficients are stored with
/// symmetric partners expanded, so (i, j) and (j, i) are both present.
struct GoldenCase {
  std::string name;
  int n = 0;
  int d = 0;
  std::string lambda;
  std::optional<std::string> generic_lambda;  // extra run checking degrees only
  int expected_deg_p = 0;
  int expected_curve_degree = 0;
  std::vector<ExactCoefficient> coefficients;  // empty when the curve is not printed
  double tolerance = 1e-15;
  std::vector<NamedConstant> constants;
  std::vector<SpuriousComponent> spurious;

  /// Reference monomial for normalisation: x^degree.
  ExactValue reference_value() const;
  XYPoly expected_curve() const;
};

struct GoldenFile {
  int format_version = 0;
  std::vector<GoldenCase> cases;
};

/// The fixture file compiled into the library.
const GoldenFile& builtin_golden_cases();
GoldenFile parse_golden_cases(const std::string& json_text);
GoldenFile load_golden_cases(const std::string& path);
const GoldenCase& find_golden_case(const GoldenFile& file, const std::string& name);
/// Case whose (n, d, lambda) matches, if any.
const GoldenCase* match_golden_case(const GoldenFile& file, int n, int d, const std::string& lambda);

XYPoly exact_polynomial(const std::vector<ExactCoefficient>& coeffs);

}  // namespace arctic
