#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "arctic/num_poly.hpp"
#include "arctic/poly_builder.hpp"
#include "arctic/xy_poly.hpp"

namespace arctic {

using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// (m_A + m_B)-square banded matrix: m_B shifted copies of A's coefficient
/// row (a_0 … a_mA) followed by m_A shifted copies of B's.
struct SylvesterMatrix {
  int m_a = 0;
  int m_b = 0;
  RealMatrix entries;
};

SylvesterMatrix sylvester(const NumPoly& a, const NumPoly& b);
/// Same layout with the given formal degrees; leading coefficients may vanish.
SylvesterMatrix sylvester_formal(const NumPoly& a, int m_a, const NumPoly& b, int m_b);

Real determinant(const RealMatrix& m);

/// p̃(t) = m·P(t) − t·P′(t), of formal degree m − 1.
NumPoly reduced_companion(const NumPoly& p);

/// D_m(P) = (−1)^{m(m−1)/2} det S_{m−1,m−1}(P̃, P′) / m^{m−2}. Formal degree m is the
/// coefficient count of `p`; the leading coefficient must be nonzero.
Real discriminant(const NumPoly& p);
/// D_m(P) = (−1)^{m(m−1)/2} / p_m · det S_{m,m−1}(P, P′).
Real discriminant_via_derivative(const NumPoly& p);
/// D_m(P) = p_m^{2m−2} Π_{i<k} (r_i − r_k)² from numerically computed roots.
Real discriminant_via_roots(const NumPoly& p);
/// The Sylvester route without the leading-coefficient precondition; used on
/// interpolation nodes where the formal degree must be kept.
Real discriminant_formal(const NumPoly& p);

struct DiscriminantSurface {
  XYPoly poly;
  Real fit_residual;        // max |fit − value| / max |value| over the nodes
  Real condition_estimate;  // |R_max| / |R_min| of the pivoted QR
  int node_count = 0;
  int replaced_nodes = 0;
  std::vector<std::string> events;
};

/// The bivariate polynomial Υ(x, y) = D_m(P(x, y; t)) of total degree ≤ 2m − 2,
/// obtained by least squares on an oversampled Padua grid over [−1, 2]².
DiscriminantSurface discriminant_surface(const TPoly& p, int precision_bits);

/// Total degree of Υ read off its restriction to a generic line through the
/// unit square (Chebyshev interpolation, last non-negligible coefficient).
int discriminant_degree_along_line(const TPoly& p, int precision_bits);

using PolyMatrix = std::vector<std::vector<XYPoly>>;

/// Fraction-free (Bareiss) determinant over the ring of bivariate
/// polynomials, with row swaps on zero pivots. A matrix that stays singular
/// yields the zero polynomial.
XYPoly bareiss_determinant(PolyMatrix m, int precision_bits);

/// Υ(x, y) through the Bareiss determinant of S_{m−1,m−1}(P̃, P′) with affine
/// entries. Intended for small m (cross-validation only).
XYPoly discriminant_surface_symbolic(const TPoly& p, int precision_bits);

}  // namespace arctic
