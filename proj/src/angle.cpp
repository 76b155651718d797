#include "arctic/angle.hpp"

#include <regex>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

Rational frac_part(const Rational& r) {
  // floor for rationals with positive denominator
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --q;
  return r - Rational(q);
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::BadInput, "zero denominator in rational angle");
  multiple_ = Rational(numerator, denominator);
}

RationalAngle RationalAngle::reduced_mod_pi() const { return RationalAngle(frac_part(multiple_)); }

bool RationalAngle::equal_mod_pi(const RationalAngle& other) const {
  return (multiple_ - other.multiple_).denominator() == 1;
}

Real RationalAngle::value() const {
  Real r = pi();
  r *= multiple_.numerator();
  r /= multiple_.denominator();
  return r;
}

std::string RationalAngle::to_string() const {
  if (multiple_.denominator() == 1) return std::to_string(multiple_.numerator()) + " pi";
  return std::to_string(multiple_.numerator()) + "/" + std::to_string(multiple_.denominator()) +
         " pi";
}

std::optional<RationalAngle> parse_rational_angle(const std::string& text) {
  static const std::regex kForm(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*\*?\s*pi\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, kForm)) return std::nullopt;
  std::int64_t num = std::stoll(m[1].str());
  std::int64_t den = m[2].matched ? std::stoll(m[2].str()) : 1;
  if (den == 0) return std::nullopt;
  return RationalAngle(num, den);
}

Real sin(const RationalAngle& a) {
  // reduce modulo 2π: multiple in [0, 2)
  Rational r = a.multiple_of_pi();
  Rational half = r / Rational(2);
  Rational m = frac_part(half) * Rational(2);
  if (m == Rational(0) || m == Rational(1)) return Real(0);
  if (m == Rational(1, 2)) return Real(1);
  if (m == Rational(3, 2)) return Real(-1);
  return boost::multiprecision::sin(RationalAngle(m).value());
}

Real cos(const RationalAngle& a) { return sin(a + RationalAngle(1, 2)); }

Real cot(const RationalAngle& a) {
  Rational m = frac_part(a.multiple_of_pi());
  if (m == Rational(0))
    throw Error(ErrorKind::PoleAtInfinity, "cotangent of a multiple of pi (" + a.to_string() + ")");
  if (m == Rational(1, 2)) return Real(0);
  if (m == Rational(1, 4)) return Real(1);
  if (m == Rational(3, 4)) return Real(-1);
  Real v = RationalAngle(m).value();
  return boost::multiprecision::cos(v) / boost::multiprecision::sin(v);
}

RationalAngle AngleForm::resolve(const RationalAngle& theta) const {
  return theta_sign > 0 ? theta + offset : offset - theta;
}

Real AngleForm::value(const Real& theta) const {
  Real v = offset.value();
  if (theta_sign > 0)
    v += theta;
  else
    v -= theta;
  return v;
}

bool structurally_equal_mod_pi(const AngleForm& a, const AngleForm& b) {
  return a.theta_sign == b.theta_sign && a.offset.equal_mod_pi(b.offset);
}

}  // namespace arctic
