#include "arctic/parametric_curve.hpp"

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

// K / (sin(p·z + u) · sin(q·z + v)) and its z-derivative.
struct CosecantPair {
  Real value;
  Real derivative;
};

CosecantPair cosecant_pair(const Real& k, const Real& p, const Real& u, const Real& q,
                           const Real& v, const Real& z, const Real& pole_tol) {
  Real arg1 = p * z + u;
  Real arg2 = q * z + v;
  Real s1 = sin(arg1), s2 = sin(arg2);
  if (abs(s1) < pole_tol || abs(s2) < pole_tol)
    throw Error(ErrorKind::PoleHit, "denominator vanishes at zeta = " + to_sci(z, 20));
  Real value = k / (s1 * s2);
  Real derivative = -value * (p * cos(arg1) / s1 + q * cos(arg2) / s2);
  return {value, derivative};
}

}  // namespace

std::string to_string(PortionLabel label) {
  switch (label) {
    case PortionLabel::NW: return "NW";
    case PortionLabel::NE: return "NE";
    case PortionLabel::SE: return "SE";
    case PortionLabel::SW: return "SW";
  }
  return "?";
}

FCoefficients f_coefficients(const ModelParams& params, const Real& zeta) {
  WorkingPrecision guard(params.precision_bits);
  const Real pole_tol = tolerance(params.precision_bits, 2);
  const Real eta = params.eta_value();
  const Real& lambda = params.lambda;
  const Real alpha = params.alpha_value();
  const Real one(1), zero(0);
  const Real sin2eta = sin(Rational(2) * params.eta);

  auto ta = cosecant_pair(sin2eta, one, lambda - eta, one, lambda + eta, zeta, pole_tol);
  auto tb = cosecant_pair(sin2eta, one, zero, one, 2 * eta, zeta, pole_tol);
  auto t3 = cosecant_pair(-sin(lambda + eta), one, zero, one, lambda + eta, zeta, pole_tol);
  auto t4 = cosecant_pair(alpha * sin(alpha * (lambda - eta)), alpha, zero, alpha,
                          alpha * (lambda - eta), zeta, pole_tol);

  FCoefficients fc;
  fc.a = ta.value;
  fc.b = tb.value;
  fc.c = t3.value + t4.value;
  fc.da = ta.derivative;
  fc.db = tb.derivative;
  fc.dc = t3.derivative + t4.derivative;
  fc.scale = abs_max(abs_max(ta.value, tb.value), abs_max(t3.value, t4.value));
  return fc;
}

Real eval_f(const Real& x, const Real& y, const ModelParams& params, const Real& zeta) {
  WorkingPrecision guard(params.precision_bits);
  FCoefficients fc = f_coefficients(params, zeta);
  return x * fc.a + y * fc.b + fc.c;
}

Real eval_f_prime(const Real& x, const Real& y, const ModelParams& params, const Real& zeta) {
  WorkingPrecision guard(params.precision_bits);
  FCoefficients fc = f_coefficients(params, zeta);
  return x * fc.da + y * fc.db + fc.dc;
}

Real eval_g(const Real& x, const Real& y, const ModelParams& params, const Real& phi) {
  WorkingPrecision guard(params.precision_bits);
  const Real pole_tol = tolerance(params.precision_bits, 2);
  const Real& vk = params.varkappa;
  const Real two_eta = 2 * params.eta_value();
  const Real alpha = params.alpha_value();
  const Real sin2eta = sin(Rational(2) * params.eta);

  Real s_minus = sin(vk - phi), s_plus = sin(vk + phi);
  Real s_minus2 = sin(vk + two_eta - phi), s_plus2 = sin(vk + two_eta + phi);
  Real s_alpha_plus = sin(alpha * (vk + phi)), s_alpha_minus = sin(alpha * (vk - phi));
  for (const Real* s : {&s_minus, &s_plus, &s_minus2, &s_plus2, &s_alpha_plus, &s_alpha_minus})
    if (abs(*s) < pole_tol)
      throw Error(ErrorKind::PoleHit, "denominator vanishes at phi = " + to_sci(phi, 20));

  return x * sin2eta / (s_minus * s_minus2) + y * sin2eta / (s_plus * s_plus2) -
         sin(2 * vk) / (s_plus * s_minus) +
         alpha * sin(2 * alpha * vk) / (s_alpha_plus * s_alpha_minus);
}

ParamPoint solve_point(const ModelParams& params, const Real& zeta) {
  WorkingPrecision guard(params.precision_bits);
  FCoefficients fc = f_coefficients(params, zeta);
  Real det = fc.a * fc.db - fc.b * fc.da;
  Real det_scale = abs(fc.a * fc.db) + abs(fc.b * fc.da);
  if (det_scale == 0 || abs(det) <= tolerance(params.precision_bits, 2) * det_scale)
    throw Error(ErrorKind::SingularSystem,
                "double-root system is singular at zeta = " + to_sci(zeta, 30));

  ParamPoint pt;
  pt.zeta = zeta;
  pt.phi = zeta - params.varkappa;
  pt.x = (-fc.c * fc.db + fc.b * fc.dc) / det;
  pt.y = (-fc.a * fc.dc + fc.c * fc.da) / det;

  Real f = pt.x * fc.a + pt.y * fc.b + fc.c;
  Real fp = pt.x * fc.da + pt.y * fc.db + fc.dc;
  Real fscale = abs_max(abs_max(pt.x * fc.a, pt.y * fc.b), fc.c);
  Real fpscale = abs_max(abs_max(pt.x * fc.da, pt.y * fc.db), fc.dc);
  pt.residual_f = fscale == 0 ? Real(0) : Real(abs(f) / fscale);
  pt.residual_fprime = fpscale == 0 ? Real(0) : Real(abs(fp) / fpscale);
  return pt;
}

CurvePortion sample_portion(const ModelParams& params, int count) {
  if (count < 2) throw Error(ErrorKind::BadInput, "sample count must be at least 2");
  WorkingPrecision guard(params.precision_bits);
  const Real span = params.zeta_span();
  const Real eps = tolerance(params.precision_bits, 4);
  const Real p = pi();

  CurvePortion portion;
  portion.label = PortionLabel::NW;
  portion.points.reserve(static_cast<size_t>(count));

  ParamPoint first;
  first.zeta = 0;
  first.phi = -params.varkappa;
  first.x = params.kappa;
  first.y = 0;
  first.residual_f = first.residual_fprime = 0;
  portion.points.push_back(first);

  for (int i = 1; i + 1 < count; ++i) {
    Real c = cos(p * i / (count - 1));
    Real zeta = eps + (span - 2 * eps) * (1 - c) / 2;
    portion.points.push_back(solve_point(params, zeta));
  }

  ParamPoint last;
  last.zeta = span;
  last.phi = params.varkappa;
  last.x = 0;
  last.y = params.kappa;
  last.residual_f = last.residual_fprime = 0;
  portion.points.push_back(last);

  if (!is_monotone(portion))
    portion.warnings.push_back("Gamma_NW is not monotone along zeta for this (n, d, lambda)");
  return portion;
}

bool is_monotone(const CurvePortion& portion) {
  const auto& pts = portion.points;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x > pts[i - 1].x) return false;
    if (pts[i].y < pts[i - 1].y) return false;
  }
  return true;
}

std::vector<CurvePortion> complete_curve(const CurvePortion& portion, const ModelParams& params) {
  if (portion.label != PortionLabel::NW)
    throw Error(ErrorKind::BadInput, "complete_curve expects the NW portion");
  WorkingPrecision guard(params.precision_bits);

  LambdaInput crossed;
  if (params.lambda_exact)
    crossed = RationalAngle(1, 1) - *params.lambda_exact;
  else
    crossed = to_sci(pi() - params.lambda, params.precision_bits * 3 / 10 + 10);
  ModelParams crossed_params = make_params(params.n, params.d, crossed, params.precision_bits);
  CurvePortion crossed_nw = sample_portion(crossed_params, static_cast<int>(portion.points.size()));

  auto reflect = [](const CurvePortion& src, PortionLabel label, bool flip_x, bool flip_y) {
    CurvePortion out;
    out.label = label;
    out.from_symmetry_assumption = true;
    out.points = src.points;
    for (ParamPoint& p : out.points) {
      if (flip_x) p.x = 1 - p.x;
      if (flip_y) p.y = 1 - p.y;
    }
    return out;
  };

  std::vector<CurvePortion> out;
  out.push_back(portion);
  out.push_back(reflect(crossed_nw, PortionLabel::NE, true, false));
  out.push_back(reflect(portion, PortionLabel::SE, true, true));
  out.push_back(reflect(crossed_nw, PortionLabel::SW, false, true));
  return out;
}

}  // namespace arctic
