#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "arctic/errors.hpp"
#include "arctic/real.hpp"

namespace arctic::test {

inline double log10_abs(const Real& v) {
  if (v == 0) return -1e9;
  return static_cast<double>(log10(abs(v)));
}

// Absolute closeness with a readable failure message.
#define CHECK_CLOSE(a, b, tol)                                                              \
  do {                                                                                      \
    ::arctic::Real diff_ = abs(::arctic::Real(a) - ::arctic::Real(b));                      \
    INFO("lhs = ", ::arctic::to_sci(::arctic::Real(a), 25), ", rhs = ",                     \
         ::arctic::to_sci(::arctic::Real(b), 25), ", |diff| = ", ::arctic::to_sci(diff_, 5)); \
    CHECK(diff_ < ::arctic::Real(tol));                                                     \
  } while (0)

#define CHECK_THROWS_KIND(expr, kind_)                        \
  do {                                                        \
    bool caught_ = false;                                     \
    try {                                                     \
      (void)(expr);                                           \
    } catch (const ::arctic::Error& e_) {                     \
      caught_ = true;                                         \
      INFO("message: ", e_.what());                           \
      CHECK(e_.kind() == (kind_));                            \
    }                                                         \
    CHECK_MESSAGE(caught_, "expected arctic::Error");         \
  } while (0)

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260915);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace arctic::test
