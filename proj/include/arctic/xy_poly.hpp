#pragma once

#include <utility>
#include <vector>

#include "arctic/real.hpp"

namespace arctic {

struct AffineForm;

/// Dense bivariate polynomial Σ c(i,j) x^i y^j over i + j ≤ total_degree.
class XYPoly {
 public:
  XYPoly() : XYPoly(0) {}
  explicit XYPoly(int total_degree);

  static XYPoly constant(const Real& c);
  static XYPoly affine(const AffineForm& f);

  /// Number of monomials of total degree ≤ deg.
  static int monomial_count(int deg) { return (deg + 1) * (deg + 2) / 2; }
  /// Exponents (i, j) in storage order: by total degree, then decreasing i.
  static std::vector<std::pair<int, int>> monomials(int deg);

  int total_degree() const { return degree_; }
  Real coefficient(int i, int j) const;
  Real& at(int i, int j);
  const std::vector<Real>& data() const { return coeffs_; }
  std::vector<Real>& data() { return coeffs_; }

  Real operator()(const Real& x, const Real& y) const;
  Real max_abs() const;
  bool is_zero() const;

  XYPoly scaled(const Real& s) const;
  /// Scaled so the largest-magnitude coefficient is +1 or −1 (sign kept).
  XYPoly normalized_max() const;
  /// Zeroes coefficients below relative·max and shrinks to the true degree.
  XYPoly truncated(const Real& relative) const;
  /// max |c(i,j) − c(j,i)| / max |c|.
  Real symmetry_deviation() const;

  friend XYPoly operator+(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator-(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);

 private:
  static int index(int i, int j);
  int degree_;
  std::vector<Real> coeffs_;
};

/// Quotient of a by b assuming b divides a; the remainder is returned in
/// `remainder` when non-null. Long division in graded-lex order with
/// coefficients below relative·max(|a|) treated as zero.
XYPoly divide(const XYPoly& a, const XYPoly& b, const Real& relative, XYPoly* remainder = nullptr);

/// Least-squares cofactor: the polynomial c of degree deg(a) − deg(b) that
/// minimises ‖a − b·c‖ over coefficients. Returns c; `remainder` gets a − b·c.
XYPoly least_squares_cofactor(const XYPoly& a, const XYPoly& b, XYPoly* remainder);

}  // namespace arctic
