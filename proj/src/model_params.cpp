#include "arctic/model_params.hpp"

#include <numeric>
#include <regex>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

Real cot_real(const Real& x) { return cos(x) / sin(x); }

}  // namespace

LambdaInput parse_lambda(const std::string& text) {
  if (auto exact = parse_rational_angle(text)) return *exact;
  static const std::regex kDecimal(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
  if (std::regex_match(text, kDecimal)) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
  }
  throw Error(ErrorKind::BadInput,
              "lambda must be '<int>/<int> pi' or a decimal number of radians, got '" + text + "'");
}

std::string to_string(const LambdaInput& lambda) {
  if (const auto* exact = std::get_if<RationalAngle>(&lambda)) return exact->to_string();
  return std::get<std::string>(lambda);
}

Real ModelParams::alpha_value() const {
  Real a = alpha.numerator();
  a /= alpha.denominator();
  return a;
}

ModelParams make_params(int n, int d, const LambdaInput& lambda, int precision_bits) {
  if (precision_bits < kMinPrecisionBits)
    throw Error(ErrorKind::BadPrecision, "precision must be at least 64 bits, got " +
                                             std::to_string(precision_bits));
  if (n <= 0 || d <= 0) throw Error(ErrorKind::BadInput, "n and d must be positive");
  if (std::gcd(n, d) != 1) throw Error(ErrorKind::NotCoprime, "n and d must be coprime");
  if (d >= n) throw Error(ErrorKind::RegimeViolation, "d must be smaller than n (alpha > 1)");

  WorkingPrecision guard(precision_bits);
  ModelParams p;
  p.n = n;
  p.d = d;
  p.precision_bits = precision_bits;
  p.lambda_text = to_string(lambda);
  p.alpha = Rational(n, d);
  p.eta = RationalAngle(n - d, 2 * n);

  const RationalAngle pi_angle(1, 1);
  if (const auto* exact = std::get_if<RationalAngle>(&lambda)) {
    if (!(p.eta < *exact && *exact < pi_angle - p.eta))
      throw Error(ErrorKind::RegimeViolation,
                  "lambda = " + exact->to_string() + " is outside the disordered window (" +
                      p.eta.to_string() + ", " + (pi_angle - p.eta).to_string() + ")");
    p.lambda_exact = *exact;
    p.lambda = exact->value();
    p.varkappa_exact = Rational(1, 2) * (pi_angle - *exact - p.eta);
    p.varkappa = p.varkappa_exact->value();
  } else {
    p.lambda = parse_real(std::get<std::string>(lambda));
    Real eta = p.eta.value();
    if (!(eta < p.lambda && p.lambda < pi() - eta))
      throw Error(ErrorKind::RegimeViolation,
                  "lambda = " + std::get<std::string>(lambda) +
                      " is outside the disordered window (eta, pi - eta)");
    p.varkappa = (pi() - p.lambda - eta) / 2;
  }
  p.delta = cos(Rational(2) * p.eta);
  p.kappa = contact_kappa(p);
  return p;
}

ModelParams with_precision(const ModelParams& params, int precision_bits) {
  LambdaInput lambda = params.lambda_exact ? LambdaInput(*params.lambda_exact) : LambdaInput(params.lambda_text);
  return make_params(params.n, params.d, lambda, precision_bits);
}

Weights weights(const ModelParams& params) {
  WorkingPrecision guard(params.precision_bits);
  Weights w;
  if (params.lambda_exact) {
    w.a = sin(*params.lambda_exact + params.eta);
    w.b = sin(*params.lambda_exact - params.eta);
  } else {
    Real eta = params.eta_value();
    w.a = sin(params.lambda + eta);
    w.b = sin(params.lambda - eta);
  }
  w.c = sin(Rational(2) * params.eta);
  return w;
}

Real delta_from_weights(const Weights& w) { return (w.a * w.a + w.b * w.b - w.c * w.c) / (2 * w.a * w.b); }

Real contact_kappa(const ModelParams& params) {
  WorkingPrecision guard(params.precision_bits);
  Real alpha = params.alpha_value();
  Real cot_minus, cot_plus, cot_alpha;
  if (params.lambda_exact) {
    RationalAngle minus = *params.lambda_exact - params.eta;
    cot_minus = cot(minus);
    cot_plus = cot(*params.lambda_exact + params.eta);
    cot_alpha = cot(params.alpha * minus);
  } else {
    Real eta = params.eta_value();
    cot_minus = cot_real(params.lambda - eta);
    cot_plus = cot_real(params.lambda + eta);
    cot_alpha = cot_real(alpha * (params.lambda - eta));
  }
  Real denom = cot_minus - cot_plus;
  Real scale = abs_max(cot_minus, cot_plus);
  if (abs(denom) <= tolerance(params.precision_bits, 2) * (1 + scale))
    throw Error(ErrorKind::DegenerateDenominator,
                "cot(lambda-eta) = cot(lambda+eta): lambda is at the regime boundary");
  return (alpha * cot_alpha - cot_plus) / denom;
}

}  // namespace arctic
