#include "arctic/xy_poly.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <algorithm>

#include "arctic/errors.hpp"
#include "arctic/poly_builder.hpp"

namespace arctic {

XYPoly::XYPoly(int total_degree)
    : degree_(total_degree), coeffs_(static_cast<size_t>(monomial_count(total_degree)), Real(0)) {
  if (total_degree < 0) throw Error(ErrorKind::BadInput, "negative polynomial degree");
}

int XYPoly::index(int i, int j) {
  int k = i + j;
  return k * (k + 1) / 2 + j;
}

std::vector<std::pair<int, int>> XYPoly::monomials(int deg) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= deg; ++k)
    for (int j = 0; j <= k; ++j) out.emplace_back(k - j, j);
  return out;
}

XYPoly XYPoly::constant(const Real& c) {
  XYPoly p(0);
  p.coeffs_[0] = c;
  return p;
}

XYPoly XYPoly::affine(const AffineForm& f) {
  XYPoly p(1);
  p.at(0, 0) = f.c0;
  p.at(1, 0) = f.cx;
  p.at(0, 1) = f.cy;
  return p;
}

Real XYPoly::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return Real(0);
  return coeffs_[static_cast<size_t>(index(i, j))];
}

Real& XYPoly::at(int i, int j) {
  if (i < 0 || j < 0 || i + j > degree_) throw Error(ErrorKind::BadInput, "monomial out of range");
  return coeffs_[static_cast<size_t>(index(i, j))];
}

Real XYPoly::operator()(const Real& x, const Real& y) const {
  // Horner in y for each power of x, then Horner in x.
  Real acc = 0;
  for (int i = degree_; i >= 0; --i) {
    Real inner = 0;
    for (int j = degree_ - i; j >= 0; --j) inner = inner * y + coeffs_[static_cast<size_t>(index(i, j))];
    acc = acc * x + inner;
  }
  return acc;
}

Real XYPoly::max_abs() const {
  Real m = 0;
  for (const Real& c : coeffs_) m = abs_max(m, c);
  return m;
}

bool XYPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Real& c) { return c == 0; });
}

XYPoly XYPoly::scaled(const Real& s) const {
  XYPoly out = *this;
  for (Real& c : out.coeffs_) c *= s;
  return out;
}

XYPoly XYPoly::normalized_max() const {
  Real best = 0;
  for (const Real& c : coeffs_)
    if (abs(c) > abs(best)) best = c;
  if (best == 0) return *this;
  return scaled(Real(1) / best);
}

XYPoly XYPoly::truncated(const Real& relative) const {
  Real cutoff = max_abs() * relative;
  int deg = 0;
  for (auto [i, j] : monomials(degree_))
    if (abs(coefficient(i, j)) > cutoff) deg = std::max(deg, i + j);
  XYPoly out(deg);
  for (auto [i, j] : monomials(deg)) {
    Real c = coefficient(i, j);
    out.at(i, j) = abs(c) > cutoff ? c : Real(0);
  }
  return out;
}

Real XYPoly::symmetry_deviation() const {
  Real m = max_abs();
  if (m == 0) return Real(0);
  Real worst = 0;
  for (auto [i, j] : monomials(degree_)) worst = abs_max(worst, coefficient(i, j) - coefficient(j, i));
  return worst / m;
}

XYPoly operator+(const XYPoly& a, const XYPoly& b) {
  XYPoly out(std::max(a.degree_, b.degree_));
  for (auto [i, j] : XYPoly::monomials(out.degree_)) out.at(i, j) = a.coefficient(i, j) + b.coefficient(i, j);
  return out;
}

XYPoly operator-(const XYPoly& a, const XYPoly& b) {
  XYPoly out(std::max(a.degree_, b.degree_));
  for (auto [i, j] : XYPoly::monomials(out.degree_)) out.at(i, j) = a.coefficient(i, j) - b.coefficient(i, j);
  return out;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  XYPoly out(a.degree_ + b.degree_);
  for (auto [i1, j1] : XYPoly::monomials(a.degree_)) {
    const Real& ca = a.coeffs_[static_cast<size_t>(XYPoly::index(i1, j1))];
    if (ca == 0) continue;
    for (auto [i2, j2] : XYPoly::monomials(b.degree_)) {
      const Real& cb = b.coeffs_[static_cast<size_t>(XYPoly::index(i2, j2))];
      if (cb == 0) continue;
      out.coeffs_[static_cast<size_t>(XYPoly::index(i1 + i2, j1 + j2))] += ca * cb;
    }
  }
  return out;
}

XYPoly divide(const XYPoly& a, const XYPoly& b, const Real& relative, XYPoly* remainder) {
  // graded-lex leading term: highest total degree, then highest power of x
  auto leading = [](const XYPoly& p, const Real& cutoff) -> std::pair<int, int> {
    for (int k = p.total_degree(); k >= 0; --k)
      for (int j = 0; j <= k; ++j)
        if (abs(p.coefficient(k - j, j)) > cutoff) return {k - j, j};
    return {-1, -1};
  };
  Real a_cut = a.max_abs() * relative;
  auto [bi, bj] = leading(b, b.max_abs() * relative);
  if (bi < 0) throw Error(ErrorKind::BadInput, "division by the zero polynomial");
  const Real lb = b.coefficient(bi, bj);

  XYPoly work = a;
  XYPoly quotient(std::max(0, a.total_degree() - (bi + bj)));
  XYPoly rest(a.total_degree());
  for (;;) {
    auto [ai, aj] = leading(work, a_cut);
    if (ai < 0) break;
    Real c = work.coefficient(ai, aj);
    if (ai >= bi && aj >= bj) {
      Real q = c / lb;
      int qi = ai - bi, qj = aj - bj;
      quotient.at(qi, qj) += q;
      for (auto [i, j] : XYPoly::monomials(b.total_degree())) {
        Real cb = b.coefficient(i, j);
        if (cb != 0) work.at(i + qi, j + qj) -= q * cb;
      }
      work.at(ai, aj) = 0;
    } else {
      rest.at(ai, aj) = c;
      work.at(ai, aj) = 0;
    }
  }
  if (remainder) *remainder = rest + work;
  return quotient;
}

XYPoly least_squares_cofactor(const XYPoly& a, const XYPoly& b, XYPoly* remainder) {
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  const int cdeg = a.total_degree() - b.total_degree();
  if (cdeg < 0) throw Error(ErrorKind::BadInput, "cofactor degree would be negative");
  auto rows = XYPoly::monomials(a.total_degree());
  auto cols = XYPoly::monomials(cdeg);

  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  Vector rhs(static_cast<Eigen::Index>(rows.size()));
  for (size_t r = 0; r < rows.size(); ++r) rhs(static_cast<Eigen::Index>(r)) = a.coefficient(rows[r].first, rows[r].second);
  for (size_t c = 0; c < cols.size(); ++c) {
    XYPoly mono(cdeg);
    mono.at(cols[c].first, cols[c].second) = 1;
    XYPoly prod = b * mono;
    for (size_t r = 0; r < rows.size(); ++r)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = prod.coefficient(rows[r].first, rows[r].second);
  }
  Vector sol = m.colPivHouseholderQr().solve(rhs);
  XYPoly cof(cdeg);
  for (size_t c = 0; c < cols.size(); ++c) cof.at(cols[c].first, cols[c].second) = sol(static_cast<Eigen::Index>(c));
  if (remainder) *remainder = a - b * cof;
  return cof;
}

}  // namespace arctic
