#include "arctic/num_poly.hpp"

#include <algorithm>

#include "arctic/errors.hpp"

namespace arctic {

NumPoly NumPoly::from_roots(std::span<const Real> roots, const Real& leading) {
  std::vector<Real> c{leading};
  for (const Real& r : roots) {
    std::vector<Real> next(c.size() + 1, Real(0));
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return NumPoly(std::move(c));
}

Real NumPoly::operator()(const Real& t) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex NumPoly::operator()(const Complex& t) const {
  Complex acc(Real(0), Real(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

NumPoly NumPoly::derivative() const {
  if (coeffs_.size() <= 1) return NumPoly({Real(0)});
  std::vector<Real> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return NumPoly(std::move(d));
}

NumPoly NumPoly::reversed() const {
  std::vector<Real> r(coeffs_.rbegin(), coeffs_.rend());
  return NumPoly(std::move(r));
}

Real NumPoly::max_abs_coeff() const {
  Real m = 0;
  for (const Real& c : coeffs_) m = abs_max(m, c);
  return m;
}

NumPoly NumPoly::trimmed(const Real& relative) const {
  Real cutoff = max_abs_coeff() * relative;
  size_t len = coeffs_.size();
  while (len > 1 && abs(coeffs_[len - 1]) <= cutoff) --len;
  return NumPoly(std::vector<Real>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(len)));
}

NumPoly operator*(const NumPoly& a, const NumPoly& b) {
  std::vector<Real> c(a.coeffs_.size() + b.coeffs_.size() - 1, Real(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return NumPoly(std::move(c));
}

NumPoly operator+(const NumPoly& a, const NumPoly& b) {
  std::vector<Real> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Real(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return NumPoly(std::move(c));
}

NumPoly operator*(const Real& s, const NumPoly& p) {
  std::vector<Real> c = p.coeffs_;
  for (Real& x : c) x *= s;
  return NumPoly(std::move(c));
}

std::vector<Complex> polynomial_roots(const NumPoly& p) {
  const int m = p.degree();
  if (m < 1) throw Error(ErrorKind::BadInput, "root finding needs degree >= 1");
  if (p.leading() == 0)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "root finding needs a nonzero leading coefficient");

  // Monic copy keeps the update formula scale free.
  std::vector<Real> c = p.coeffs();
  Real lead = c.back();
  for (Real& x : c) x /= lead;
  NumPoly monic(c);
  NumPoly dmonic = monic.derivative();

  // Initial guesses on a circle whose radius is the Fujiwara bound.
  Real radius = 0;
  for (int k = 0; k < m; ++k) {
    Real a = abs(c[static_cast<size_t>(k)]);
    if (a == 0) continue;
    Real r = pow(a, Real(1) / (m - k));
    if (k == 0) r = pow(a / 2, Real(1) / m);
    radius = abs_max(radius, r);
  }
  radius *= 2;
  if (radius == 0) radius = 1;

  const Real two_pi = 2 * pi();
  std::vector<Complex> z(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    Real angle = two_pi * k / m + Real(0.4);
    z[static_cast<size_t>(k)] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const int bits = current_precision_bits();
  const Real eps = pow2(-(bits - 8));
  const Complex one(Real(1), Real(0));
  const int max_iter = 40 * m + bits;
  int stalled = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real max_step = 0;
    for (int k = 0; k < m; ++k) {
      Complex& zk = z[static_cast<size_t>(k)];
      Complex pv = monic(zk);
      if (pv == Complex(Real(0), Real(0))) continue;
      Complex ratio = pv / dmonic(zk);
      Complex sum(Real(0), Real(0));
      for (int j = 0; j < m; ++j) {
        if (j == k) continue;
        Complex diff = zk - z[static_cast<size_t>(j)];
        if (diff != Complex(Real(0), Real(0))) sum += one / diff;
      }
      Complex step = ratio / (one - ratio * sum);
      zk -= step;
      max_step = abs_max(max_step, abs(step) / (1 + abs(zk)));
    }
    if (max_step < eps) break;
    // Multiple roots converge only linearly and then dither at the
    // sqrt(eps) level; stop once the iteration is no longer contracting.
    if (max_step < sqrt(eps)) {
      if (++stalled > 4 * bits) break;
    }
  }

  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace arctic
