#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "arctic/real.hpp"

namespace arctic {

using Rational = boost::rational<std::int64_t>;

/// The angle (numerator/denominator)·π, always in lowest terms with a
/// positive denominator.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t numerator, std::int64_t denominator);
  explicit RationalAngle(Rational multiple) : multiple_(multiple) {}

  std::int64_t numerator() const { return multiple_.numerator(); }
  std::int64_t denominator() const { return multiple_.denominator(); }
  const Rational& multiple_of_pi() const { return multiple_; }

  /// Representative of the class modulo π, in [0, 1)·π.
  RationalAngle reduced_mod_pi() const;
  bool equal_mod_pi(const RationalAngle& other) const;
  bool is_multiple_of_pi() const { return multiple_.denominator() == 1; }

  Real value() const;

  /// "p/q pi", or "p pi" when q = 1.
  std::string to_string() const;

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.multiple_ + b.multiple_);
  }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.multiple_ - b.multiple_);
  }
  friend RationalAngle operator-(const RationalAngle& a) { return RationalAngle(-a.multiple_); }
  friend RationalAngle operator*(const Rational& k, const RationalAngle& a) {
    return RationalAngle(k * a.multiple_);
  }
  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.multiple_ == b.multiple_;
  }
  friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
    return a.multiple_ < b.multiple_;
  }

 private:
  Rational multiple_{0};
};

/// Parses "<int>/<int> pi" or "<int> pi" (whitespace-tolerant). Returns
/// nullopt when the text is not of that form.
std::optional<RationalAngle> parse_rational_angle(const std::string& text);

// Exact-aware trigonometry: multiples of π/2 produce exact 0 and ±1.
Real sin(const RationalAngle& a);
Real cos(const RationalAngle& a);
/// Throws PoleAtInfinity when the angle is a multiple of π.
Real cot(const RationalAngle& a);

/// An angle of the form sign·θ + offset, where θ is a per-model base angle
/// that may or may not be a rational multiple of π. Two forms with the same
/// sign are comparable modulo π exactly whatever θ is.
struct AngleForm {
  int theta_sign = 1;  // ±1
  RationalAngle offset;

  AngleForm negated() const { return {-theta_sign, -offset}; }
  /// Exact resolution when θ is a rational multiple of π.
  RationalAngle resolve(const RationalAngle& theta) const;
  Real value(const Real& theta) const;

  friend bool operator==(const AngleForm& a, const AngleForm& b) {
    return a.theta_sign == b.theta_sign && a.offset == b.offset;
  }
};

/// Structural equality modulo π: same θ sign and offsets differing by an
/// integer multiple of π. Does not depend on θ.
bool structurally_equal_mod_pi(const AngleForm& a, const AngleForm& b);

}  // namespace arctic
