#include "arctic/curve_identify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>

#include "arctic/errors.hpp"

namespace arctic {

using boost::multiprecision::floor;
using boost::multiprecision::round;

std::string to_string(Classification c) { return c == Classification::Arctic ? "arctic" : "spurious"; }

ComponentVerdict classify_point(const TPoly& p, const Real& x, const Real& y, const PoleSystem& poles) {
  const Real tol = tolerance(poles.precision_bits, 8);
  NumPoly q = p.at(x, y);
  if (q.degree() < 2) throw Error(ErrorKind::NoDoubleRoot, "P has degree below 2");
  // Work in s = 1/t when the leading coefficient is the smaller end, so a
  // double root at t = ∞ shows up as one at s = 0.
  const bool reversed = abs(q.leading()) < abs(q[0]);
  NumPoly work = reversed ? q.reversed() : q;
  if (work.leading() == 0) throw Error(ErrorKind::NoDoubleRoot, "P vanishes identically at the point");

  std::vector<Complex> roots = polynomial_roots(work);
  size_t bi = 0, bk = 1;
  Real best_score = -1;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t k = i + 1; k < roots.size(); ++k) {
      Real score = abs(roots[i] - roots[k]) / (1 + abs((roots[i] + roots[k]) / Real(2)));
      if (best_score < 0 || score < best_score) best_score = score, bi = i, bk = k;
    }

  ComponentVerdict v;
  v.x = x;
  v.y = y;
  Complex mid = (roots[bi] + roots[bk]) / Real(2);
  v.gap = abs(roots[bi] - roots[bk]);
  if (best_score >= tol)
    throw Error(ErrorKind::NoDoubleRoot, "nearest roots are " + to_sci(v.gap, 6) + " apart at (" + to_sci(x, 12) + ", " +
                                             to_sci(y, 12) + ")");

  const Real v0 = abs(poles.v.at(0).value);
  if (reversed && abs(mid) <= tol) {
    v.at_infinity = true;
    v.is_real = true;
    v.in_interval = true;
    v.double_root = Complex(Real(0), Real(0));
  } else {
    Complex t = reversed ? Complex(Real(1), Real(0)) / mid : mid;
    v.double_root = t;
    v.is_real = abs(t.imag()) <= tol * (1 + abs(t));
    v.in_interval = v.is_real && abs(t.real()) >= v0 * (1 - tol);
  }
  v.classification = v.is_real && v.in_interval ? Classification::Arctic : Classification::Spurious;
  return v;
}

namespace {

Real smallest_singular_direction(const RealMatrix& a, RealVector& w) {
  const Eigen::Index cols = a.cols();
  Eigen::HouseholderQR<RealMatrix> qr(a);
  RealMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  Real diag_max = 0;
  for (Eigen::Index i = 0; i < cols; ++i) diag_max = abs_max(diag_max, r(i, i));
  const Real floor_value = diag_max * pow2(-current_precision_bits());
  for (Eigen::Index i = 0; i < cols; ++i)
    if (abs(r(i, i)) < floor_value) r(i, i) = floor_value;

  // inverse iteration on RᵀR
  w = RealVector::Constant(cols, Real(1) / sqrt(Real(cols)));
  for (int it = 0; it < 40; ++it) {
    RealVector z = r.transpose().triangularView<Eigen::Lower>().solve(w);
    RealVector next = r.triangularView<Eigen::Upper>().solve(z);
    next /= next.norm();
    if (next.dot(w) < 0) next = -next;
    Real change = (next - w).norm();
    w = next;
    if (change < pow2(-current_precision_bits() / 2)) break;
  }
  return (r * w).norm() / sqrt(Real(cols));
}

}  // namespace

CurveFit fit_minimal_curve(const std::vector<PlanePoint>& points, int max_degree, int precision_bits,
                           std::optional<Real> tol, int min_degree) {
  WorkingPrecision guard(precision_bits);
  if (max_degree < 2) throw Error(ErrorKind::BadInput, "max_degree must be at least 2");
  const int needed = XYPoly::monomial_count(max_degree);
  if (static_cast<int>(points.size()) < needed)
    throw Error(ErrorKind::BadInput, "need at least " + std::to_string(needed) + " samples for degree " +
                                         std::to_string(max_degree) + ", got " + std::to_string(points.size()));
  const Real threshold = tol ? *tol : tolerance(precision_bits * 7, 8);

  CurveFit out;
  const auto rows = static_cast<Eigen::Index>(points.size());
  for (int g = std::max(min_degree, 2); g <= max_degree; ++g) {
    auto monos = XYPoly::monomials(g);
    const auto cols = static_cast<Eigen::Index>(monos.size());
    RealMatrix a(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& [x, y] = points[static_cast<size_t>(r)];
      for (Eigen::Index c = 0; c < cols; ++c) {
        auto [i, j] = monos[static_cast<size_t>(c)];
        a(r, c) = pow(x, i) * pow(y, j);
      }
    }
    RealVector scale(cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      scale(c) = a.col(c).norm();
      if (scale(c) == 0) scale(c) = 1;
      a.col(c) /= scale(c);
    }
    RealVector w;
    Real residual = smallest_singular_direction(a, w);
    out.attempts.emplace_back(g, residual);
    if (residual < threshold) {
      XYPoly curve(g);
      for (Eigen::Index c = 0; c < cols; ++c) {
        auto [i, j] = monos[static_cast<size_t>(c)];
        curve.at(i, j) = w(c) / scale(c);
      }
      out.curve = curve.normalized_max();
      out.degree = g;
      out.residual = residual;
      return out;
    }
  }
  std::string tried;
  for (const auto& [g, r] : out.attempts) tried += " " + std::to_string(g) + ":" + to_sci(r, 3);
  throw Error(ErrorKind::NoFitWithinBound, "no curve of degree <= " + std::to_string(max_degree) +
                                               " fits the samples (residuals" + tried + ")");
}

CurveFit fit_minimal_curve(const CurvePortion& samples, int max_degree, int precision_bits, std::optional<Real> tol,
                           int min_degree) {
  std::vector<PlanePoint> pts;
  pts.reserve(samples.points.size());
  for (const auto& p : samples.points) pts.emplace_back(p.x, p.y);
  return fit_minimal_curve(pts, max_degree, precision_bits, tol, min_degree);
}

// ---------------------------------------------------------------------------
// rationalisation

namespace {

using Basis = std::vector<std::vector<Real>>;

Real dot(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Textbook LLL (δ = 3/4), recomputing Gram–Schmidt after every change; the
// bases here have at most three vectors.
void lll_reduce(Basis& b) {
  const size_t k = b.size();
  Basis star(k);
  std::vector<std::vector<Real>> mu(k, std::vector<Real>(k, Real(0)));
  std::vector<Real> norms(k);
  auto gram_schmidt = [&] {
    for (size_t i = 0; i < k; ++i) {
      star[i] = b[i];
      for (size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norms[j];
        for (size_t c = 0; c < star[i].size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norms[i] = dot(star[i], star[i]);
    }
  };
  gram_schmidt();
  size_t i = 1;
  for (int guard = 0; i < k && guard < 10000; ++guard) {
    for (size_t j = i; j-- > 0;) {
      Real q = round(mu[i][j]);
      if (q != 0) {
        for (size_t c = 0; c < b[i].size(); ++c) b[i][c] -= q * b[j][c];
        gram_schmidt();
      }
    }
    if (norms[i] >= (Real(3) / 4 - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = std::max<size_t>(i - 1, 1);
    }
  }
}

bool fits_int64(const Real& v, std::int64_t bound) { return abs(v) <= Real(bound); }

std::optional<ExactValue> continued_fraction(const Real& c, const Real& tol, std::int64_t height) {
  Real h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real x = c;
  for (int term = 0; term < 200; ++term) {
    Real a = floor(x);
    Real h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (!fits_int64(k2, height) || !fits_int64(h2, height)) return std::nullopt;
    if (abs(c - h2 / k2) <= tol) {
      ExactValue v;
      v.p = h2.convert_to<std::int64_t>();
      v.denominator = k2.convert_to<std::int64_t>();
      return v;
    }
    Real frac = x - a;
    if (frac == 0) return std::nullopt;
    x = 1 / frac;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
  }
  return std::nullopt;
}

std::optional<ExactValue> quadratic_relation(const Real& c, std::int64_t radicand, const Real& tol,
                                             std::int64_t height, int precision_bits) {
  const Real root = sqrt(Real(radicand));
  const Real weight = pow2(precision_bits / 2);
  Basis b = {{Real(1), Real(0), Real(0), weight * c},
             {Real(0), Real(1), Real(0), weight},
             {Real(0), Real(0), Real(1), weight * root}};
  lll_reduce(b);
  for (const auto& v : b) {
    // v = s·(c) + a·(1) + r·(√D), so c ≈ −(a + r√D)/s
    Real s = v[0], a = v[1], r = v[2];
    if (s == 0 || !fits_int64(s, height) || !fits_int64(a, height) || !fits_int64(r, height)) continue;
    if (s < 0) s = -s, a = -a, r = -r;
    Real approx = -(a + r * root) / s;
    if (abs(c - approx) > tol) continue;
    ExactValue e;
    e.p = (-a).convert_to<std::int64_t>();
    e.q = (-r).convert_to<std::int64_t>();
    e.radicand = e.q == 0 ? 1 : radicand;
    e.denominator = s.convert_to<std::int64_t>();
    std::int64_t g = std::gcd(std::gcd(std::abs(e.p), std::abs(e.q)), e.denominator);
    if (g > 1) e.p /= g, e.q /= g, e.denominator /= g;
    return e;
  }
  return std::nullopt;
}

}  // namespace

bool RationalizationTable::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const RationalEntry& e) { return e.ok; });
}

std::vector<ExactCoefficient> RationalizationTable::integer_table() const {
  std::vector<ExactCoefficient> out;
  if (common_denominator == 0) return out;
  for (const auto& e : entries) {
    ExactValue v = e.exact;
    std::int64_t f = common_denominator / v.denominator;
    v.p *= f, v.q *= f, v.denominator = 1;
    out.push_back({e.i, e.j, v});
  }
  return out;
}

RationalizationTable rationalize_coefficients(const XYPoly& curve, const std::vector<std::int64_t>& radicands,
                                              int precision_bits, std::int64_t height) {
  WorkingPrecision guard(precision_bits);
  RationalizationTable table;
  const int deg = curve.total_degree();
  const Real cutoff = curve.max_abs() * tolerance(precision_bits, 2);
  table.reference_i = deg;
  table.reference_j = 0;
  table.normalization = curve.coefficient(deg, 0);
  if (abs(table.normalization) <= cutoff) {
    // fall back to the largest coefficient
    Real best = 0;
    for (auto [i, j] : XYPoly::monomials(deg))
      if (abs(curve.coefficient(i, j)) > abs(best)) best = curve.coefficient(i, j), table.reference_i = i, table.reference_j = j;
    table.normalization = best;
  }
  if (table.normalization == 0) return table;

  const Real base_tol = tolerance(precision_bits, 3);
  std::int64_t lcm = 1;
  bool lcm_ok = true;
  for (auto [i, j] : XYPoly::monomials(deg)) {
    RationalEntry e;
    e.i = i;
    e.j = j;
    Real raw = curve.coefficient(i, j);
    e.value = abs(raw) <= cutoff ? Real(0) : raw / table.normalization;
    const Real tol = base_tol * (1 + abs(e.value));
    std::optional<ExactValue> found = continued_fraction(e.value, tol, height);
    for (std::int64_t dval : radicands) {
      if (found) break;
      if (dval <= 1) continue;
      found = quadratic_relation(e.value, dval, tol, height, precision_bits);
    }
    if (found) {
      e.ok = true;
      e.exact = *found;
      e.residual = abs(e.value - found->value());
      if (lcm_ok) {
        std::int64_t g = std::gcd(lcm, found->denominator);
        std::int64_t next = lcm / g * found->denominator;
        if (next > height) lcm_ok = false;
        else lcm = next;
      }
    } else {
      e.residual = -1;
      lcm_ok = false;
    }
    table.entries.push_back(e);
  }
  table.common_denominator = lcm_ok ? lcm : 0;
  return table;
}

// ---------------------------------------------------------------------------
// pipeline

std::vector<Real> diagonal_zeros(const XYPoly& surface, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  const int deg = surface.total_degree();
  std::vector<Real> h(static_cast<size_t>(deg) + 1, Real(0));
  for (auto [i, j] : XYPoly::monomials(deg)) h[static_cast<size_t>(i + j)] += surface.coefficient(i, j);
  NumPoly diag = NumPoly(h).trimmed(tolerance(precision_bits, 2));
  if (diag.degree() < 1) return {};

  const Real tol = tolerance(precision_bits, 8);
  std::vector<Complex> roots = polynomial_roots(diag);
  std::vector<std::pair<Real, bool>> real_roots;  // value, clustered
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex r = roots[i];
    bool clustered = false;
    for (size_t k = i + 1; k < roots.size(); ++k)
      if (!used[k] && abs(roots[k] - r) < tol * (1 + abs(r))) {
        r = (r + roots[k]) / Real(2);
        used[k] = true;
        clustered = true;
        break;
      }
    if (abs(r.imag()) > tol * (1 + abs(r))) continue;
    if (r.real() < -tol || r.real() > 1 + tol) continue;
    real_roots.emplace_back(r.real(), clustered);
  }

  NumPoly dh = diag.derivative();
  NumPoly ddh = dh.derivative();
  std::vector<Real> out;
  for (auto [s, clustered] : real_roots) {
    // Newton on h for simple zeros, on h′ for double ones
    const NumPoly& f = clustered ? dh : diag;
    const NumPoly& df = clustered ? ddh : dh;
    for (int it = 0; it < 60; ++it) {
      Real slope = df(s);
      if (slope == 0) break;
      Real step = f(s) / slope;
      s -= step;
      if (abs(step) <= pow2(-precision_bits) * (1 + abs(s))) break;
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<ParamPoint> interior_samples(const ModelParams& params, int count) {
  CurvePortion portion = sample_portion(params, count + 2);
  std::vector<ParamPoint> out(portion.points.begin() + 1, portion.points.end() - 1);
  return out;
}

}  // namespace

CurveReport run_pipeline(const ModelParams& params, const CurveOptions& options) {
  const int bits = params.precision_bits;
  WorkingPrecision guard(bits);
  CurveReport rep;
  rep.n = params.n;
  rep.d = params.d;
  rep.lambda = params.lambda_text;
  rep.precision_bits = bits;
  rep.kappa = params.kappa;
  rep.varkappa = params.varkappa;

  PoleSystem poles = pole_system(params);
  for (const auto& c : poles.coincidences) rep.coincidences.push_back(c.to_string());
  for (const auto& c : poles.near_coincidences)
    rep.warnings.push_back("numeric near-coincidence " + c.to_string() + " kept uncancelled");
  QPoly q = build_q(poles);
  rep.p = build_p(params, poles, q);
  rep.degrees = assert_degrees(params, rep.p);

  if (rep.p.degree() <= 25) rep.line_degree = discriminant_degree_along_line(rep.p, bits);
  if (options.compute_surface && rep.p.degree() <= options.surface_max_deg_p) {
    rep.surface = discriminant_surface(rep.p, bits);
    rep.surface_degree = rep.surface->poly.total_degree();
    for (const auto& e : rep.surface->events) rep.warnings.push_back(e);
  } else {
    rep.surface_degree = rep.line_degree;
  }

  // The arctic component divides Υ, so its degree never exceeds deg Υ.
  int max_degree = options.max_degree.value_or(rep.degrees.curve_degree_bound);
  if (!options.max_degree && rep.surface_degree >= 2) max_degree = std::min(max_degree, rep.surface_degree);
  max_degree = std::max(max_degree, 2);
  const int needed = XYPoly::monomial_count(max_degree);
  const int count = std::max(options.samples, needed + needed / 2 + 2);
  // Residuals of too-low degrees fall geometrically on a short arc, so the
  // fit runs at raised precision. A degree is certified only when the residual
  // one degree lower stands clear of the noise floor 2^−(fit_bits − bits);
  // otherwise the precision doubles and the scan resumes at that degree.
  const int max_fit_bits = options.max_fit_bits > 0 ? options.max_fit_bits : 8 * bits;
  const Real surface_norm = rep.surface ? rep.surface->poly.max_abs() : Real(1);
  int fit_bits = 2 * bits;
  int min_degree = 2;
  std::map<int, Real> rejected;  // residuals of degrees ruled out reliably
  CurvePortion portion;
  int portion_bits = 0;
  for (;;) {
    if (portion_bits != fit_bits) {
      WorkingPrecision fit_guard(fit_bits);
      portion = sample_portion(with_precision(params, fit_bits), count);
      portion_bits = fit_bits;
    }
    rep.fit = fit_minimal_curve(portion, max_degree, fit_bits, options.fit_tolerance, min_degree);
    for (const auto& [g, r] : rep.fit.attempts)
      if (g < rep.fit.degree) rejected[g] = r;
    const int g = rep.fit.degree;
    auto below = rejected.find(g - 1);
    const bool certified = g == 2 || (below != rejected.end() && below->second >= pow2(bits - fit_bits));
    if (!certified) {
      if (2 * fit_bits <= max_fit_bits) {
        fit_bits *= 2;
        min_degree = g;
        continue;
      }
      rep.warnings.push_back("degree " + std::to_string(g) + " fit not certified at " + std::to_string(fit_bits) + " bits");
    }
    if (!rep.surface) break;
    XYPoly remainder;
    least_squares_cofactor(rep.surface->poly, rep.fit.curve, &remainder);
    rep.division_remainder = remainder.max_abs() / surface_norm;
    if (*rep.division_remainder < tolerance(bits, 4)) break;
    rep.warnings.push_back("degree " + std::to_string(g) + " fit rejected: does not divide the surface");
    rejected[g] = rep.fit.residual;
    min_degree = g + 1;
  }
  rep.fit_bits = fit_bits;
  for (const auto& w : portion.warnings) rep.warnings.push_back(w);
  rep.sample_count = static_cast<int>(portion.points.size());
  rep.symmetry_deviation = rep.fit.curve.symmetry_deviation();

  rep.fit_on_curve_max = 0;
  rep.surface_on_curve_max = 0;
  std::vector<ParamPoint> checks = interior_samples(params, options.check_samples);
  for (const auto& pt : checks) {
    rep.fit_on_curve_max = abs_max(rep.fit_on_curve_max, rep.fit.curve(pt.x, pt.y) / rep.fit.curve.max_abs());
    if (rep.surface) rep.surface_on_curve_max = abs_max(rep.surface_on_curve_max, rep.surface->poly(pt.x, pt.y) / surface_norm);
    ComponentVerdict v = classify_point(rep.p, pt.x, pt.y, poles);
    ++rep.samples_checked;
    if (v.classification == Classification::Arctic) ++rep.samples_arctic;
  }
  if (!checks.empty()) rep.components.push_back(classify_point(rep.p, checks[checks.size() / 2].x, checks[checks.size() / 2].y, poles));

  if (rep.surface) {
    for (const Real& s : diagonal_zeros(rep.surface->poly, bits)) {
      try {
        rep.components.push_back(classify_point(rep.p, s, s, poles));
      } catch (const Error& e) {
        rep.warnings.push_back(std::string("diagonal zero at ") + to_sci(s, 12) + " not classified: " + e.what());
      }
    }
  }

  rep.component_structure_verified =
      params.lambda_exact && match_golden_case(builtin_golden_cases(), params.n, params.d, params.lambda_exact->to_string());
  if (!rep.component_structure_verified) rep.warnings.push_back("component structure unverified");
  return rep;
}

namespace {

Real relative_deviation(const Real& got, const Real& expected, const Real& scale) {
  return expected != 0 ? abs(got - expected) / abs(expected) : abs(got) / scale;
}

// Scales `poly` so that its x^deg coefficient equals `reference` and compares
// against the fixture table.
std::vector<GoldenRow> compare_table(const XYPoly& poly, const std::vector<ExactCoefficient>& table, const Real& reference,
                                     Real& max_dev) {
  std::vector<GoldenRow> rows;
  max_dev = 0;
  const int deg = poly.total_degree();
  Real lead = poly.coefficient(deg, 0);
  if (lead == 0) {
    max_dev = Real(1);
    return rows;
  }
  XYPoly scaled = poly.scaled(reference / lead);
  Real table_max = 0;
  for (const auto& c : table) table_max = abs_max(table_max, c.value.value());
  for (const auto& c : table) {
    GoldenRow r;
    r.i = c.i;
    r.j = c.j;
    r.expected = c.value;
    r.expected_value = c.value.value();
    r.got = scaled.coefficient(c.i, c.j);
    r.deviation = relative_deviation(r.got, r.expected_value, table_max);
    max_dev = abs_max(max_dev, r.deviation);
    rows.push_back(r);
  }
  // monomials the fixture leaves out must vanish
  for (auto [i, j] : XYPoly::monomials(deg)) {
    bool listed = std::any_of(table.begin(), table.end(), [&](const ExactCoefficient& c) { return c.i == i && c.j == j; });
    if (listed) continue;
    Real dev = abs(scaled.coefficient(i, j)) / table_max;
    if (dev > 0) {
      GoldenRow r;
      r.i = i;
      r.j = j;
      r.expected_value = 0;
      r.got = scaled.coefficient(i, j);
      r.deviation = dev;
      max_dev = abs_max(max_dev, dev);
      rows.push_back(r);
    }
  }
  return rows;
}

SpuriousCheck check_spurious(const CurveReport& report, const SpuriousComponent& comp, const PoleSystem& poles, int bits) {
  SpuriousCheck chk;
  const Real px = comp.x.value(), py = comp.y.value();
  chk.point_error = Real(1);
  for (const auto& v : report.components) {
    Real err = sqrt((v.x - px) * (v.x - px) + (v.y - py) * (v.y - py));
    if (err < chk.point_error) {
      chk.point_error = err;
      chk.double_root = v.double_root;
      chk.classified_spurious = v.classification == Classification::Spurious;
    }
  }
  if (comp.double_root == "+-i") {
    const Complex i(Real(0), Real(1));
    chk.root_error = std::min(abs(chk.double_root - i), abs(chk.double_root + i));
  } else {
    chk.root_error = 0;
  }

  XYPoly factor = exact_polynomial(comp.factor);
  chk.factor_deviation = Real(1);
  if (report.surface && report.surface_degree > report.fit.degree) {
    XYPoly rem;
    XYPoly cof = least_squares_cofactor(report.surface->poly, report.fit.curve, &rem);
    Real dev;
    compare_table(cof, comp.factor, factor.coefficient(factor.total_degree(), 0), dev);
    chk.factor_deviation = dev;
  }

  chk.square_identity_deviation = 0;
  if (!comp.sum_of_squares.empty()) {
    XYPoly sum(factor.total_degree());
    for (const auto& term : comp.sum_of_squares) {
      XYPoly form = exact_polynomial(term.form);
      sum = sum + (form * form).scaled(term.weight.value());
    }
    chk.square_identity_deviation = (sum - factor).max_abs() / factor.max_abs();
  }

  // sign test of the factor on a grid over the unit square, away from the point
  chk.positive_elsewhere = true;
  const int grid = 40;
  for (int a = 0; a <= grid && chk.positive_elsewhere; ++a)
    for (int b = 0; b <= grid; ++b) {
      Real x = Real(a) / grid, y = Real(b) / grid;
      if (abs(x - px) + abs(y - py) < Real(1) / (2 * grid)) continue;
      if (factor(x, y) <= 0) {
        chk.positive_elsewhere = false;
        break;
      }
    }
  (void)poles;
  (void)bits;
  return chk;
}

}  // namespace

GoldenComparison compare_with_golden(const CurveReport& report, const GoldenCase& golden) {
  GoldenComparison cmp;
  cmp.name = golden.name;
  cmp.max_deviation = 0;
  const Real tol = Real(golden.tolerance);
  if (report.degrees.deg_p != golden.expected_deg_p)
    cmp.failures.push_back("deg P = " + std::to_string(report.degrees.deg_p) + ", expected " +
                           std::to_string(golden.expected_deg_p));
  if (report.fit.degree != golden.expected_curve_degree)
    cmp.failures.push_back("curve degree = " + std::to_string(report.fit.degree) + ", expected " +
                           std::to_string(golden.expected_curve_degree));

  if (!golden.coefficients.empty() && report.fit.degree == golden.expected_curve_degree) {
    const Real ref = golden.reference_value().value();
    cmp.rows = compare_table(report.fit.curve, golden.coefficients, ref, cmp.max_deviation);
    if (report.surface && report.surface_degree == golden.expected_curve_degree) {
      Real dev;
      compare_table(report.surface->poly, golden.coefficients, ref, dev);
      cmp.surface_max_deviation = dev;
    }
    for (const auto& r : cmp.rows)
      if (r.deviation > tol)
        cmp.failures.push_back("coefficient x^" + std::to_string(r.i) + " y^" + std::to_string(r.j) + ": expected " +
                               (r.expected_value == 0 ? std::string("0") : r.expected.to_string()) + ", got " +
                               to_sci(r.got, 20));
    if (cmp.surface_max_deviation && *cmp.surface_max_deviation > tol)
      cmp.failures.push_back("surface deviates from the printed curve by " + to_sci(*cmp.surface_max_deviation, 3));
  }

  if (!golden.spurious.empty()) {
    ModelParams params = make_params(golden.n, golden.d, parse_lambda(golden.lambda), report.precision_bits);
    PoleSystem poles = pole_system(params);
    for (const auto& comp : golden.spurious) {
      SpuriousCheck chk = check_spurious(report, comp, poles, report.precision_bits);
      const Real point_tol = tolerance(report.precision_bits, 4);
      if (chk.point_error > point_tol) cmp.failures.push_back("spurious point not located: error " + to_sci(chk.point_error, 3));
      if (!chk.classified_spurious) cmp.failures.push_back("spurious point classified arctic");
      if (chk.root_error > tolerance(report.precision_bits, 8))
        cmp.failures.push_back("spurious double root off by " + to_sci(chk.root_error, 3));
      if (chk.factor_deviation > tol)
        cmp.failures.push_back("spurious factor deviates by " + to_sci(chk.factor_deviation, 3));
      if (chk.square_identity_deviation > tol) cmp.failures.push_back("sum-of-squares form does not match the factor");
      if (!chk.positive_elsewhere) cmp.failures.push_back("spurious factor changes sign on the grid");
      cmp.spurious.push_back(chk);
    }
  }
  return cmp;
}

CurveReport verify_golden(const GoldenCase& golden, int precision_bits) {
  WorkingPrecision guard(precision_bits);
  ModelParams params = make_params(golden.n, golden.d, parse_lambda(golden.lambda), precision_bits);
  CurveReport report = run_pipeline(params);
  report.golden = compare_with_golden(report, golden);

  if (golden.generic_lambda) {
    ModelParams generic = make_params(golden.n, golden.d, parse_lambda(*golden.generic_lambda), precision_bits);
    PoleSystem poles = pole_system(generic);
    TPoly p = build_p(generic, poles, build_q(poles));
    int deg_curve = discriminant_degree_along_line(p, precision_bits);
    if (p.degree() != golden.expected_deg_p || deg_curve != golden.expected_curve_degree)
      report.golden->failures.push_back("at lambda = " + *golden.generic_lambda + ": deg P = " + std::to_string(p.degree()) +
                                        ", curve degree = " + std::to_string(deg_curve));
  }

  if (!report.golden->passed()) {
    std::string msg = golden.name + ":";
    for (const auto& f : report.golden->failures) msg += "\n  " + f;
    throw Error(ErrorKind::GoldenMismatch, msg);
  }
  return report;
}

}  // namespace arctic
