#pragma once

#include <span>
#include <vector>

#include "arctic/real.hpp"

namespace arctic {

/// Univariate polynomial with real coefficients, lowest power first.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Monic polynomial with the given real roots.
  static NumPoly from_roots(std::span<const Real> roots, const Real& leading = Real(1));

  /// Formal degree: coefficient count minus one (leading entry may be zero).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Real>& coeffs() const { return coeffs_; }
  const Real& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Real& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
  const Real& leading() const { return coeffs_.back(); }

  Real operator()(const Real& t) const;
  Complex operator()(const Complex& t) const;

  NumPoly derivative() const;
  /// Coefficients reversed: t^m P(1/t).
  NumPoly reversed() const;
  Real max_abs_coeff() const;

  /// Drops leading coefficients whose magnitude is at most `relative` times
  /// the largest coefficient.
  NumPoly trimmed(const Real& relative) const;

  friend NumPoly operator*(const NumPoly& a, const NumPoly& b);
  friend NumPoly operator+(const NumPoly& a, const NumPoly& b);
  friend NumPoly operator*(const Real& s, const NumPoly& p);

 private:
  std::vector<Real> coeffs_;
};

/// All complex roots of `p` (formal degree ≥ 1, nonzero leading coefficient)
/// by Aberth–Ehrlich iteration at the working precision. Roots are returned
/// sorted by real part then imaginary part.
std::vector<Complex> polynomial_roots(const NumPoly& p);

}  // namespace arctic
