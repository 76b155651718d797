#include "arctic/real.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

unsigned bits_to_digits10(int bits) {
  // boost stores precision in decimal digits; round up so that the MPFR
  // mantissa is at least `bits` wide.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398119521)) + 1;
}

// Reals created outside any WorkingPrecision guard get the library default
// instead of boost's 50 digits.
[[maybe_unused]] const bool kDefaultInstalled = [] {
  Real::default_precision(bits_to_digits10(kDefaultPrecisionBits));
  return true;
}();

}  // namespace

WorkingPrecision::WorkingPrecision(int bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_digits10_); }

int current_precision_bits() {
  Real probe;
  return static_cast<int>(mpfr_get_prec(probe.backend().data()));
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real pow2(int exponent) {
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), exponent, MPFR_RNDN);
  return r;
}

Real tolerance(int precision_bits, int divisor) { return pow2(-(precision_bits / divisor)); }

Real abs_max(const Real& a, const Real& b) {
  Real aa = abs(a), bb = abs(b);
  return aa > bb ? aa : bb;
}

std::string to_fixed(const Real& value, int decimals) {
  if (decimals < 0) decimals = 0;
  std::vector<char> buf(64);
  std::string fmt = "%." + std::to_string(decimals) + "RNf";
  for (;;) {
    int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value.backend().data());
    if (n < 0) throw Error(ErrorKind::BadInput, "failed to format real");
    if (static_cast<size_t>(n) < buf.size()) {
      std::string out(buf.data(), static_cast<size_t>(n));
      // normalise "-0.000" to "0.000" so output is independent of signed zeros
      if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
      return out;
    }
    buf.resize(static_cast<size_t>(n) + 1);
  }
}

std::string to_sci(const Real& value, int digits) {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  std::string fmt = "%." + std::to_string(digits - 1) + "RNe";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value.backend().data());
  return std::string(buf.data());
}

Real parse_real(const std::string& text) {
  Real r;
  if (mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(ErrorKind::BadInput, "not a decimal number: '" + text + "'");
  return r;
}

}  // namespace arctic
