#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>

namespace arctic {

/// Arbitrary-precision real backed by MPFR. Precision is taken from the
/// process-wide default at construction time; see WorkingPrecision.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = std::complex<Real>;

inline constexpr int kDefaultPrecisionBits = 256;
inline constexpr int kMinPrecisionBits = 64;

/// Sets the default precision used by newly created Reals for the lifetime of
/// the guard and restores the previous value on destruction.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(int bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

int current_precision_bits();

Real pi();
Real pow2(int exponent);

/// 2^(-bits/divisor): the family of tolerances used across the library.
Real tolerance(int precision_bits, int divisor);

Real abs_max(const Real& a, const Real& b);

/// Fixed-point decimal rendering with `decimals` digits after the point,
/// rounded half-to-even by MPFR.
std::string to_fixed(const Real& value, int decimals);
/// Shortest scientific rendering with `digits` significant digits.
std::string to_sci(const Real& value, int digits);

Real parse_real(const std::string& text);

}  // namespace arctic
