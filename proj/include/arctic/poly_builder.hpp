#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arctic/angle.hpp"
#include "arctic/model_params.hpp"
#include "arctic/num_poly.hpp"

namespace arctic {

/// c0 + cx·x + cy·y.
struct AffineForm {
  Real c0 = 0;
  Real cx = 0;
  Real cy = 0;

  Real operator()(const Real& x, const Real& y) const { return c0 + cx * x + cy * y; }
  Real max_abs() const;

  AffineForm& operator+=(const AffineForm& o);
  friend AffineForm operator*(const Real& s, const AffineForm& f) {
    return {s * f.c0, s * f.cx, s * f.cy};
  }
};

/// Polynomial in t whose coefficients are affine forms in (x, y); index k is
/// the coefficient of t^k.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<AffineForm> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<AffineForm>& coeffs() const { return coeffs_; }
  const AffineForm& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const AffineForm& leading() const { return coeffs_.back(); }

  /// Numeric polynomial in t at the point (x, y), keeping the formal degree.
  NumPoly at(const Real& x, const Real& y) const;
  /// Polynomial formed by the x-, y- or constant parts of the coefficients.
  NumPoly part(int which) const;  // 0 constant, 1 x, 2 y
  Real max_abs() const;

  /// Image under (x ↔ y, t → −t).
  TPoly mirrored() const;

 private:
  std::vector<AffineForm> coeffs_;
};

enum class PoleFamily { V, U, W };

struct Pole {
  PoleFamily family;
  int index;
  AngleForm angle;  // the pole is cot(angle)
  Real value;

  std::string name() const;  // "v0", "u1", "w3", ...
};

/// An identification pole_a = sign · pole_b.
struct Coincidence {
  std::string a;
  std::string b;
  int sign;    // +1 or -1
  bool exact;  // decided by rational angle arithmetic (false: numeric tolerance)

  std::string to_string() const;  // "v0 = w0", "v1 = -w2"
};

struct PoleSystem {
  int precision_bits = kDefaultPrecisionBits;
  std::vector<Pole> v;
  std::vector<Pole> u;
  std::vector<Pole> w;
  Real rho;
  Real theta;  // ϰ/d
  std::optional<RationalAngle> theta_exact;
  /// Coincidences used when building Q: exact ones, and structural ones that
  /// hold for every λ.
  std::vector<Coincidence> coincidences;
  /// Pairs that agree only to numeric tolerance; reported, never cancelled.
  std::vector<Coincidence> near_coincidences;

  bool has(const std::string& a, const std::string& b, int sign) const;
};

PoleSystem pole_system(const ModelParams& params);

/// A linear factor (t − root) of Q with its multiplicity.
struct QFactor {
  std::string label;  // "+w0", "-v1", ...
  AngleForm angle;    // root = cot(angle)
  Real root;
  int multiplicity;
};

struct QPoly {
  std::vector<QFactor> factors;
  NumPoly expanded;

  int degree() const { return expanded.degree(); }
};

QPoly build_q(const PoleSystem& poles);

TPoly build_p(const ModelParams& params, const PoleSystem& poles, const QPoly& q);

struct DegreeReport {
  int deg_p = 0;
  int generic_bound = 0;          // 2d + 2n − 4
  int curve_degree_bound = 0;     // 4(n + d) − 10
  bool half_integer_symmetric = false;  // d = 2, n odd, λ = π/2
  std::optional<int> expected_exact;    // 2n − 4 in the half-integer case
  AffineForm leading;
};

DegreeReport assert_degrees(const ModelParams& params, const TPoly& p);

}  // namespace arctic
