#include <numeric>

#include "arctic/parametric_curve.hpp"
#include "arctic/poly_builder.hpp"
#include "helpers.hpp"

using namespace arctic;
using arctic::test::uniform;

namespace {

struct Built {
  ModelParams params;
  PoleSystem poles;
  QPoly q;
  TPoly p;
};

Built build(int n, int d, const LambdaInput& lambda) {
  Built b{make_params(n, d, lambda), {}, {}, {}};
  b.poles = pole_system(b.params);
  b.q = build_q(b.poles);
  b.p = build_p(b.params, b.poles, b.q);
  return b;
}

// Largest deviation of P from s·E after fitting the scalar s on the largest entry of E.
Real proportional_deviation(const TPoly& p, const std::vector<AffineForm>& e) {
  REQUIRE(p.degree() + 1 == static_cast<int>(e.size()));
  Real best = 0, s = 0;
  for (size_t k = 0; k < e.size(); ++k)
    for (int c = 0; c < 3; ++c) {
      const AffineForm& f = e[k];
      Real v = c == 0 ? f.c0 : c == 1 ? f.cx : f.cy;
      if (abs(v) > best) {
        best = abs(v);
        const AffineForm& g = p[static_cast<int>(k)];
        s = (c == 0 ? g.c0 : c == 1 ? g.cx : g.cy) / v;
      }
    }
  Real dev = 0;
  for (size_t k = 0; k < e.size(); ++k) {
    const AffineForm& g = p[static_cast<int>(k)];
    const AffineForm& f = e[k];
    dev = abs_max(dev, abs_max(abs_max(g.c0 - s * f.c0, g.cx - s * f.cx), g.cy - s * f.cy));
  }
  return dev / p.max_abs();
}

// Affine form a·(x + y) + b·(x − y) + c.
AffineForm sum_diff(const Real& a, const Real& b, const Real& c) { return {c, a + b, a - b}; }

}  // namespace

TEST_CASE("pole system of alpha = 2") {
  auto params = make_params(2, 1, std::string("1.9"));
  auto poles = pole_system(params);
  WorkingPrecision guard(params.precision_bits);
  const Real& vk = params.varkappa;
  REQUIRE(poles.v.size() == 1);
  REQUIRE(poles.w.size() == 2);
  CHECK_CLOSE(poles.v[0].value, cos(vk) / sin(vk), 1e-60);
  CHECK_CLOSE(poles.u[0].value, -sin(vk) / cos(vk), 1e-60);
  CHECK_CLOSE(poles.w[0].value, cos(vk) / sin(vk), 1e-60);
  CHECK_CLOSE(poles.w[1].value, -sin(vk) / cos(vk), 1e-60);
  CHECK(poles.has("v0", "w0", 1));
  CHECK(poles.has("u0", "w1", 1));
  CHECK(poles.near_coincidences.empty());
  CHECK_CLOSE(poles.rho, sin(2 * params.eta_value()) / (sin(vk) * sin(vk + 2 * params.eta_value())), 1e-70);
}

TEST_CASE("coincidences at lambda = pi/2") {
  SUBCASE("alpha = 3/2") {
    auto poles = pole_system(make_params(3, 2, RationalAngle(1, 2)));
    CHECK(poles.has("v0", "w0", 1));
    CHECK(poles.has("u1", "w2", 1));
    CHECK(poles.has("v1", "w1", -1));
    CHECK(poles.has("u0", "w2", -1));
    for (const auto& c : poles.coincidences) CHECK(c.exact);
  }
  SUBCASE("alpha = 5/2") {
    auto poles = pole_system(make_params(5, 2, RationalAngle(1, 2)));
    CHECK(poles.has("v0", "w0", 1));
    CHECK(poles.has("u1", "w4", 1));
    CHECK(poles.has("v1", "w2", -1));
    CHECK(poles.has("u0", "w3", -1));
  }
}

TEST_CASE("generic coincidences hold for every model and lambda") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      auto poles = pole_system(make_params(n, d, std::to_string(uniform(1.45, 1.65))));
      INFO("n = ", n, ", d = ", d);
      CHECK(poles.has("v0", "w0", 1));
      CHECK(poles.has("u" + std::to_string(d - 1), "w" + std::to_string(n - 1), 1));
    }
}

TEST_CASE("common denominator Q") {
  SUBCASE("alpha = 2 has degree 4 with roots +-cot and +-tan") {
    auto b = build(2, 1, std::string("1.4"));
    CHECK(b.q.degree() == 4);
    WorkingPrecision guard(b.params.precision_bits);
    const Real& vk = b.params.varkappa;
    for (Real r : {Real(cos(vk) / sin(vk)), Real(-cos(vk) / sin(vk)), Real(sin(vk) / cos(vk)), Real(-sin(vk) / cos(vk))})
      CHECK(abs(b.q.expanded(r)) < 1e-60);
  }
  SUBCASE("alpha = 3/2 generic has degree 10") {
    CHECK(build(3, 2, std::string("1.3")).q.degree() == 10);
  }
  SUBCASE("alpha = 5/2 at pi/2 collapses to the w factors") {
    auto b = build(5, 2, RationalAngle(1, 2));
    CHECK(b.q.degree() == 10);
    for (const auto& w : b.poles.w) {
      CHECK(abs(b.q.expanded(w.value)) < 1e-60);
      CHECK(abs(b.q.expanded(Real(-w.value))) < 1e-60);
    }
  }
  SUBCASE("Q is even with a negation-symmetric root set") {
    for (auto [n, d] : {std::pair{3, 1}, {4, 3}, {5, 2}, {7, 4}}) {
      auto b = build(n, d, std::string("1.55"));
      CHECK(b.q.degree() % 2 == 0);
      for (int k = 1; k <= b.q.degree(); k += 2) CHECK(abs(b.q.expanded[k]) < 1e-60 * b.q.expanded.max_abs_coeff());
    }
  }
}

TEST_CASE("P for alpha = 2") {
  // The linear term carries a factor (x − y); without it the discriminant
  // cannot give the ellipse.
  for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.3"))}) {
    auto b = build(2, 1, lam);
    WorkingPrecision guard(b.params.precision_bits);
    Real c2 = cos(2 * b.params.varkappa), cot2 = c2 / sin(2 * b.params.varkappa);
    std::vector<AffineForm> e{sum_diff(-1, 0, 1 + c2), sum_diff(0, 2 * cot2, 0), sum_diff(1, 0, -1 + c2)};
    CHECK(b.p.degree() == 2);
    CHECK(proportional_deviation(b.p, e) < 1e-60);
  }
}

TEST_CASE("P for alpha = 3/2 at pi/2") {
  auto b = build(3, 2, RationalAngle(1, 2));
  WorkingPrecision guard(b.params.precision_bits);
  Real s3 = sqrt(Real(3));
  std::vector<AffineForm> e{sum_diff(-s3, 0, s3 * (2 + s3)), sum_diff(0, 6, 0), sum_diff(s3, 0, s3 * (-2 + s3))};
  CHECK(b.p.degree() == 2);
  CHECK(proportional_deviation(b.p, e) < 1e-60);
}

TEST_CASE("P for alpha = 3") {
  for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.8"))}) {
    auto b = build(3, 1, lam);
    WorkingPrecision guard(b.params.precision_bits);
    Real nu = b.params.varkappa + pi() / 3, s3 = sqrt(Real(3));
    // Λ = √3(1 − x − y), Θ = √3(x − y)
    auto lam_times = [&](const Real& k) { return sum_diff(-s3 * k, 0, s3 * k); };
    auto theta_times = [&](const Real& k) { return sum_diff(0, s3 * k, 0); };
    auto plus_const = [](AffineForm f, const Real& c) { f.c0 += c; return f; };
    std::vector<AffineForm> e{
        Real(cos(3 * nu)) * plus_const(lam_times(cos(nu)), sin(nu) * (1 + 4 * cos(2 * nu))),
        theta_times(-4 * cos(nu) * cos(nu) * sin(2 * nu)),
        Real(-1) * plus_const(lam_times(3 * cos(2 * nu)), sin(2 * nu) * (1 - 4 * cos(4 * nu))),
        theta_times(4 * sin(nu) * sin(nu) * sin(2 * nu)),
        Real(sin(3 * nu)) * plus_const(lam_times(sin(nu)), -cos(nu) * (1 - 4 * cos(2 * nu))),
    };
    CHECK(b.p.degree() == 4);
    CHECK(proportional_deviation(b.p, e) < 1e-60);
  }
}

TEST_CASE("P for alpha = 5/2 at pi/2") {
  auto b = build(5, 2, RationalAngle(1, 2));
  WorkingPrecision guard(b.params.precision_bits);
  Real s5 = sqrt(Real(5)), sigma = sqrt((5 - s5) / 8);
  Real half = (1 + s5) / 2, mid = (17 - 15 * s5) / 2, k = 3 + 4 * s5;
  std::vector<AffineForm> e{
      sum_diff(-1, 0, half + s5 * sigma),
      sum_diff(0, 8 * sigma, 0),
      sum_diff(k, 0, mid + 3 * s5 * sigma),
      sum_diff(0, -16 * sigma, 0),
      sum_diff(-k, 0, -mid + 3 * s5 * sigma),
      sum_diff(0, 8 * sigma, 0),
      sum_diff(1, 0, -half + s5 * sigma),
  };
  CHECK(b.p.degree() == 6);
  CHECK(proportional_deviation(b.p, e) < 1e-60);
}

TEST_CASE("degrees of P") {
  CHECK(assert_degrees(build(4, 1, std::string("1.3")).params, build(4, 1, std::string("1.3")).p).deg_p == 6);
  auto half = build(5, 2, RationalAngle(1, 2));
  auto r = assert_degrees(half.params, half.p);
  CHECK(r.deg_p == 6);
  CHECK(r.half_integer_symmetric);
  REQUIRE(r.expected_exact);
  CHECK(*r.expected_exact == 6);
  auto g = build(3, 2, std::string("1.2"));
  CHECK(assert_degrees(g.params, g.p).deg_p == 6);
  CHECK(assert_degrees(g.params, g.p).generic_bound == 6);
}

TEST_CASE("degree bound sweep") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      double eta = 1.5707963267948966 * (n - d) / n;
      for (int trial = 0; trial < 5; ++trial) {
        double lam = uniform(eta + 0.02, 3.141592653589793 - eta - 0.02);
        auto b = build(n, d, std::to_string(lam));
        INFO("n = ", n, ", d = ", d, ", lambda = ", lam);
        auto r = assert_degrees(b.params, b.p);
        CHECK(r.deg_p <= 2 * d + 2 * n - 4);
        CHECK(r.leading.max_abs() > 0);
      }
    }
}

TEST_CASE("half-integer models have degree 2n - 4 at pi/2") {
  for (int n = 3; n <= 13; n += 2) {
    auto b = build(n, 2, RationalAngle(1, 2));
    CHECK(assert_degrees(b.params, b.p).deg_p == 2 * n - 4);
  }
}

TEST_CASE("rational-function identity on 200 random points") {
  auto b = build(5, 3, std::string("1.58"));
  WorkingPrecision guard(b.params.precision_bits);
  for (int k = 0; k < 200; ++k) {
    Real x = uniform(-1, 2), y = uniform(-1, 2);
    Real phi = b.params.varkappa * uniform(-0.98, 0.98);
    Real t = cos(phi / 3) / sin(phi / 3);
    Real lhs = eval_g(x, y, b.params, phi) * b.q.expanded(t);
    Real rhs = pow(t * t + 1, 3) * b.p.at(x, y)(t);
    CHECK(abs(lhs - rhs) <= tolerance(b.params.precision_bits, 2) * (abs(lhs) + abs(rhs)));
  }
}

TEST_CASE("product identities behind the construction") {
  WorkingPrecision guard(256);
  const Real P = pi();
  const Real tol = tolerance(256, 2);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      Real phi = uniform(-1.2, 1.2);
      Real prod = 1;
      for (int j = 0; j < n; ++j) prod *= sin(phi + P * j / n);
      CHECK(abs(sin(n * phi) - pow(Real(2), n - 1) * prod) < tol);
    }
    for (int d = 1; d <= 12; ++d) {
      Real vk = uniform(0.05, 1.4 * d / n), phi = vk * uniform(-0.9, 0.9);
      Real t = cos(phi / d) / sin(phi / d);
      for (int sign : {1, -1}) {
        Real prod_n = 1, prod_d = 1;
        for (int j = 0; j < n; ++j) {
          Real a = vk / d + P * j / n;
          prod_n *= t + sign * cos(a) / sin(a);
        }
        for (int j = 0; j < d; ++j) {
          Real a = vk / d + P * j / d;
          prod_d *= t + sign * cos(a) / sin(a);
        }
        Real s = sin(phi / d);
        Real lhs_n = sin(Real(n) / d * (vk + sign * phi));
        Real rhs_n = pow(s, n) * sin(Real(n) / d * vk) * prod_n;
        Real lhs_d = sin(vk + sign * phi);
        Real rhs_d = pow(s, d) * sin(vk) * prod_d;
        INFO("n = ", n, ", d = ", d);
        CHECK(abs(lhs_n - rhs_n) < tol * (1 + abs(rhs_n)));
        CHECK(abs(lhs_d - rhs_d) < tol * (1 + abs(rhs_d)));
      }
    }
  }
}

TEST_CASE("P maps to plus or minus itself under x <-> y, t -> -t") {
  for (auto [n, d] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}, {7, 3}}) {
    for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.66"))}) {
      auto b = build(n, d, lam);
      TPoly m = b.p.mirrored();
      REQUIRE(m.degree() == b.p.degree());
      Real plus = 0, minus = 0;
      for (int k = 0; k <= m.degree(); ++k) {
        const AffineForm &a = m[k], &c = b.p[k];
        plus = abs_max(plus, abs_max(abs_max(a.c0 - c.c0, a.cx - c.cx), a.cy - c.cy));
        minus = abs_max(minus, abs_max(abs_max(a.c0 + c.c0, a.cx + c.cx), a.cy + c.cy));
      }
      INFO("n = ", n, ", d = ", d);
      CHECK(std::min(plus, minus) / b.p.max_abs() < 1e-60);
    }
  }
}

TEST_CASE("irrational lambda never cancels near coincidences") {
  auto b = build(3, 2, std::string("1.5707963267948966192313216916397514420985846996875529104874722962"));
  // Within 2^-128 of pi/2 the extra pairs are close but kept apart.
  CHECK_FALSE(b.poles.near_coincidences.empty());
  CHECK(b.q.degree() == 10);
  CHECK(b.p.degree() <= 6);
}
