#pragma once

#include <optional>
#include <string>
#include <variant>

#include "arctic/angle.hpp"
#include "arctic/real.hpp"

namespace arctic {

/// The rapidity λ as given by the user: an exact rational multiple of π or a
/// decimal number of radians. Decimal text is kept as text so it is parsed at
/// the working precision of the model.
using LambdaInput = std::variant<RationalAngle, std::string>;

/// Parses the λ grammar `<int>/<int> pi` | `<decimal>`. Anything else is
/// rejected with BadInput.
LambdaInput parse_lambda(const std::string& text);
std::string to_string(const LambdaInput& lambda);

/// Root-of-unity weight parametrisation: α = n/d, η = (π/2)(n−d)/n, with the
/// derived ϰ = (π − λ − η)/2, Δ = cos 2η and the contact point κ.
struct ModelParams {
  int n = 0;
  int d = 0;
  int precision_bits = kDefaultPrecisionBits;

  Real lambda;
  std::optional<RationalAngle> lambda_exact;
  /// λ as the user wrote it (normalised "p/q pi" for exact input).
  std::string lambda_text;

  RationalAngle eta;
  Rational alpha;

  Real varkappa;
  std::optional<RationalAngle> varkappa_exact;

  Real delta;
  Real kappa;

  bool is_exact() const { return lambda_exact.has_value(); }
  Real eta_value() const { return eta.value(); }
  Real alpha_value() const;
  /// π − λ − η, the length of the ζ interval.
  Real zeta_span() const { return 2 * varkappa; }
};

struct Weights {
  Real a;
  Real b;
  Real c;
};

ModelParams make_params(int n, int d, const LambdaInput& lambda,
                        int precision_bits = kDefaultPrecisionBits);

/// The same model rebuilt at another precision; decimal λ is re-parsed.
ModelParams with_precision(const ModelParams& params, int precision_bits);
Weights weights(const ModelParams& params);

/// (a² + b² − c²) / 2ab.
Real delta_from_weights(const Weights& w);

Real contact_kappa(const ModelParams& params);

}  // namespace arctic
