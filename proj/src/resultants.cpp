#include "arctic/resultants.hpp"

#include <cmath>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

int sign_of_triangle(int m) { return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1; }

void require_discriminant_argument(const NumPoly& p) {
  if (p.degree() < 2) throw Error(ErrorKind::BadInput, "discriminant needs degree >= 2");
  Real cutoff = p.max_abs_coeff() * tolerance(current_precision_bits(), 2);
  if (p.leading() == 0 || abs(p.leading()) <= cutoff)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "leading coefficient vanishes");
}

NumPoly derivative_formal(const NumPoly& p) {
  // keeps formal degree m − 1 even when p_m = 0
  std::vector<Real> d(static_cast<size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) d[static_cast<size_t>(k - 1)] = p[k] * k;
  return NumPoly(std::move(d));
}

// Padua points of degree n on [−1, 1]²: (n + 1)(n + 2)/2 nodes.
std::vector<std::pair<Real, Real>> padua_points(int n) {
  std::vector<std::pair<Real, Real>> pts;
  const Real p = pi();
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n + 1; ++k)
      if ((j + k) % 2 == 0) pts.emplace_back(cos(p * j / n), cos(p * k / (n + 1)));
  return pts;
}

Real binomial(int n, int k) {
  Real r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

SylvesterMatrix sylvester_formal(const NumPoly& a, int m_a, const NumPoly& b, int m_b) {
  const int size = m_a + m_b;
  SylvesterMatrix s;
  s.m_a = m_a;
  s.m_b = m_b;
  s.entries = RealMatrix::Zero(size, size);
  for (int row = 0; row < m_b; ++row)
    for (int k = 0; k <= m_a && k < a.degree() + 1; ++k) s.entries(row, row + k) = a[k];
  for (int row = 0; row < m_a; ++row)
    for (int k = 0; k <= m_b && k < b.degree() + 1; ++k) s.entries(m_b + row, row + k) = b[k];
  return s;
}

SylvesterMatrix sylvester(const NumPoly& a, const NumPoly& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw Error(ErrorKind::BadInput, "Sylvester matrix needs degrees >= 1");
  if (a.leading() == 0 || b.leading() == 0)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "Sylvester matrix needs nonzero leading coefficients");
  return sylvester_formal(a, a.degree(), b, b.degree());
}

Real determinant(const RealMatrix& m) {
  if (m.rows() == 0) return Real(1);
  return m.partialPivLu().determinant();
}

NumPoly reduced_companion(const NumPoly& p) {
  const int m = p.degree();
  std::vector<Real> c(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) c[static_cast<size_t>(k)] = p[k] * (m - k);
  return NumPoly(std::move(c));
}

Real discriminant_formal(const NumPoly& p) {
  const int m = p.degree();
  if (m < 2) throw Error(ErrorKind::BadInput, "discriminant needs degree >= 2");
  SylvesterMatrix s = sylvester_formal(reduced_companion(p), m - 1, derivative_formal(p), m - 1);
  // Replacing the P rows of S(P, P') by m·P − t·P' scales m − 1 rows by m;
  // the last-column expansion gives one factor back.
  return sign_of_triangle(m) * determinant(s.entries) / pow(Real(m), m - 2);
}

Real discriminant(const NumPoly& p) {
  require_discriminant_argument(p);
  return discriminant_formal(p);
}

Real discriminant_via_derivative(const NumPoly& p) {
  require_discriminant_argument(p);
  const int m = p.degree();
  SylvesterMatrix s = sylvester_formal(p, m, derivative_formal(p), m - 1);
  return sign_of_triangle(m) * determinant(s.entries) / p.leading();
}

Real discriminant_via_roots(const NumPoly& p) {
  require_discriminant_argument(p);
  const int m = p.degree();
  std::vector<Complex> r = polynomial_roots(p);
  Complex prod(Real(1), Real(0));
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      Complex diff = r[static_cast<size_t>(i)] - r[static_cast<size_t>(k)];
      prod *= diff * diff;
    }
  // the product is real for real polynomials; the imaginary part is rounding
  return pow(p.leading(), 2 * m - 2) * prod.real();
}

DiscriminantSurface discriminant_surface(const TPoly& p, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  const int m = p.degree();
  if (m < 2) throw Error(ErrorKind::BadInput, "discriminant surface needs deg P >= 2");
  if (p.leading().max_abs() == 0)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "leading affine form of P is identically zero");

  const int deg = 2 * m - 2;
  const int unknowns = XYPoly::monomial_count(deg);
  const int wanted = (3 * unknowns + 1) / 2;
  int padua = 1;
  while ((padua + 1) * (padua + 2) / 2 < wanted) ++padua;

  DiscriminantSurface out;
  const Real half(Real(1) / 2), stretch(Real(3) / 2);
  const Real lead_tol = tolerance(precision_bits, 4);
  const Real lead_scale = p.leading().max_abs();

  std::vector<std::pair<Real, Real>> nodes = padua_points(padua);
  std::vector<Real> values;
  values.reserve(nodes.size());
  for (auto& [u, v] : nodes) {
    for (int attempt = 0;; ++attempt) {
      Real x = half + stretch * u, y = half + stretch * v;
      if (abs(p.leading()(x, y)) > lead_tol * lead_scale * (1 + abs(x) + abs(y))) break;
      if (attempt == 8)
        throw Error(ErrorKind::LeadingCoefficientVanishesOnGrid,
                    "could not move node off the zero line of the leading coefficient");
      out.events.push_back("LeadingCoefficientVanishesOnGrid: node (" + to_sci(x, 12) + ", " +
                           to_sci(y, 12) + ") replaced");
      ++out.replaced_nodes;
      // pull the node towards the centre by a small irrational-looking step
      u *= Real(1) - Real(0.0173) * (attempt + 1);
      v *= Real(1) - Real(0.0111) * (attempt + 1);
    }
    values.push_back(discriminant_formal(p.at(half + stretch * u, half + stretch * v)));
  }
  out.node_count = static_cast<int>(nodes.size());

  Real vscale = 0;
  for (const Real& v : values) vscale = abs_max(vscale, v);
  if (vscale == 0) vscale = 1;

  auto monos = XYPoly::monomials(deg);
  const auto rows = static_cast<Eigen::Index>(nodes.size());
  const auto cols = static_cast<Eigen::Index>(monos.size());
  RealMatrix a(rows, cols);
  RealVector rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& [u, v] = nodes[static_cast<size_t>(r)];
    std::vector<Real> up(static_cast<size_t>(deg) + 1), vp(static_cast<size_t>(deg) + 1);
    up[0] = vp[0] = 1;
    for (int k = 1; k <= deg; ++k) {
      up[static_cast<size_t>(k)] = up[static_cast<size_t>(k - 1)] * u;
      vp[static_cast<size_t>(k)] = vp[static_cast<size_t>(k - 1)] * v;
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      auto [i, j] = monos[static_cast<size_t>(c)];
      a(r, c) = up[static_cast<size_t>(i)] * vp[static_cast<size_t>(j)];
    }
    rhs(r) = values[static_cast<size_t>(r)] / vscale;
  }

  Eigen::ColPivHouseholderQR<RealMatrix> qr(a);
  Real rmax = abs(qr.matrixR()(0, 0));
  Real rmin = abs(qr.matrixR()(cols - 1, cols - 1));
  out.condition_estimate = rmin == 0 ? pow2(precision_bits) : Real(rmax / rmin);
  if (out.condition_estimate > pow2(precision_bits / 2))
    throw Error(ErrorKind::IllConditionedInterpolation,
                "node matrix condition estimate " + to_sci(out.condition_estimate, 6) +
                    " exceeds the budget; retry with more nodes or precision");
  RealVector sol = qr.solve(rhs);

  RealVector fitted = a * sol;
  Real worst = 0;
  for (Eigen::Index r = 0; r < rows; ++r) worst = abs_max(worst, fitted(r) - rhs(r));
  out.fit_residual = worst;

  // back to (x, y): u = (x − 1/2)·(2/3), v = (y − 1/2)·(2/3)
  const Real shrink = Real(2) / 3;
  std::vector<std::vector<Real>> basis(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    basis[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1);
    for (int k = 0; k <= i; ++k)
      basis[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          binomial(i, k) * pow(-half, i - k) * pow(shrink, i);
  }
  XYPoly poly(deg);
  for (Eigen::Index c = 0; c < cols; ++c) {
    auto [i, j] = monos[static_cast<size_t>(c)];
    Real coeff = sol(c) * vscale;
    if (coeff == 0) continue;
    for (int ax = 0; ax <= i; ++ax)
      for (int by = 0; by <= j; ++by)
        poly.at(ax, by) += coeff * basis[static_cast<size_t>(i)][static_cast<size_t>(ax)] *
                           basis[static_cast<size_t>(j)][static_cast<size_t>(by)];
  }
  out.poly = poly.truncated(tolerance(precision_bits, 4));
  return out;
}

int discriminant_degree_along_line(const TPoly& p, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  const int m = p.degree();
  if (m < 2) throw Error(ErrorKind::BadInput, "discriminant needs deg P >= 2");
  const int deg = 2 * m - 2;
  const int count = deg + 9;

  const Real x0 = Real(0.5) + Real(0.0731), y0 = Real(0.5) - Real(0.0417);
  const Real dir = Real(0.6137);
  const Real dx = Real(1.5) * cos(dir), dy = Real(1.5) * sin(dir);
  const Real p_ = pi();

  std::vector<Real> nodes(static_cast<size_t>(count)), values(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    Real s = cos(p_ * (2 * k + 1) / (2 * count));
    nodes[static_cast<size_t>(k)] = s;
    values[static_cast<size_t>(k)] = discriminant_formal(p.at(x0 + s * dx, y0 + s * dy));
  }
  // Chebyshev coefficients by the discrete cosine transform
  std::vector<Real> cheb(static_cast<size_t>(count));
  Real cmax = 0;
  for (int j = 0; j < count; ++j) {
    Real acc = 0;
    for (int k = 0; k < count; ++k)
      acc += values[static_cast<size_t>(k)] * cos(p_ * j * (2 * k + 1) / (2 * count));
    cheb[static_cast<size_t>(j)] = acc * 2 / count;
    cmax = abs_max(cmax, cheb[static_cast<size_t>(j)]);
  }
  Real cutoff = cmax * tolerance(precision_bits, 4);
  int degree = 0;
  for (int j = 0; j < count; ++j)
    if (abs(cheb[static_cast<size_t>(j)]) > cutoff) degree = j;
  return degree;
}

XYPoly bareiss_determinant(PolyMatrix m, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  const size_t n = m.size();
  if (n == 0) return XYPoly::constant(Real(1));
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::BadInput, "Bareiss determinant needs a square matrix");
  if (n == 1) return m[0][0];

  Real scale = 0;
  for (const auto& row : m)
    for (const XYPoly& e : row) scale = abs_max(scale, e.max_abs());
  const Real rel = tolerance(precision_bits, 2);
  auto is_zero = [&](const XYPoly& p) { return p.max_abs() <= rel * scale; };

  int sign = 1;
  XYPoly prev = XYPoly::constant(Real(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t swap_with = k;
      for (size_t i = k + 1; i < n; ++i)
        if (!is_zero(m[i][k])) {
          swap_with = i;
          break;
        }
      if (swap_with == k) return XYPoly(0);  // singular: column is zero below the diagonal
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        XYPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide(num, prev, rel);
      }
    }
    prev = m[k][k];
    for (size_t i = k + 1; i < n; ++i) m[i][k] = XYPoly(0);
  }
  XYPoly det = m[n - 1][n - 1];
  return sign > 0 ? det : det.scaled(Real(-1));
}

XYPoly discriminant_surface_symbolic(const TPoly& p, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  const int m = p.degree();
  if (m < 2) throw Error(ErrorKind::BadInput, "discriminant needs deg P >= 2");
  std::vector<XYPoly> reduced, deriv;
  for (int k = 0; k < m; ++k) {
    reduced.push_back(XYPoly::affine(Real(m - k) * p[k]));
    deriv.push_back(XYPoly::affine(Real(k + 1) * p[k + 1]));
  }
  const size_t size = static_cast<size_t>(2 * m - 2);
  PolyMatrix s(size, std::vector<XYPoly>(size, XYPoly(0)));
  for (int row = 0; row < m - 1; ++row)
    for (int k = 0; k < m; ++k) {
      s[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = reduced[static_cast<size_t>(k)];
      s[static_cast<size_t>(m - 1 + row)][static_cast<size_t>(row + k)] = deriv[static_cast<size_t>(k)];
    }
  XYPoly det = bareiss_determinant(std::move(s), precision_bits);
  det = det.scaled(Real(sign_of_triangle(m)) / pow(Real(m), m - 2));
  return det.truncated(tolerance(precision_bits, 2));
}

}  // namespace arctic
