#include "arctic/golden.hpp"
#include "arctic/parametric_curve.hpp"
#include "arctic/poly_builder.hpp"
#include "helpers.hpp"

using namespace arctic;
using arctic::test::uniform;

namespace {

ModelParams at_half_pi(int n, int d) { return make_params(n, d, RationalAngle(1, 2)); }

// Ellipse equation with its printed normalisation.
Real ellipse(const Real& x, const Real& y, const Real& varkappa) {
  Real c = cos(2 * varkappa), s = sin(2 * varkappa);
  return (x + y - 1) * (x + y - 1) / (c * c) + (x - y) * (x - y) / (s * s) - 1;
}

}  // namespace

TEST_CASE("f is symmetric under x <-> y with zeta reflected") {
  for (auto [n, d] : {std::pair{2, 1}, {3, 2}, {5, 2}, {4, 1}}) {
    auto p = make_params(n, d, std::to_string(uniform(1.3, 1.8)));
    WorkingPrecision guard(p.precision_bits);
    for (int k = 0; k < 10; ++k) {
      Real x = uniform(0, 1), y = uniform(0, 1);
      Real zeta = p.zeta_span() * uniform(0.05, 0.95);
      Real lhs = eval_f(x, y, p, zeta), rhs = eval_f(y, x, p, p.zeta_span() - zeta);
      CHECK(abs(lhs - rhs) <= tolerance(p.precision_bits, 2) * (1 + abs(lhs)));
    }
  }
}

TEST_CASE("g is f in the shifted variable and is symmetric under phi -> -phi") {
  for (auto [n, d] : {std::pair{2, 1}, {3, 2}, {5, 2}, {7, 3}}) {
    auto p = make_params(n, d, std::to_string(uniform(1.4, 1.7)));
    WorkingPrecision guard(p.precision_bits);
    for (int k = 0; k < 10; ++k) {
      Real x = uniform(0, 1), y = uniform(0, 1);
      Real phi = p.varkappa * uniform(-0.95, 0.95);
      Real g = eval_g(x, y, p, phi);
      CHECK(abs(g - eval_f(x, y, p, phi + p.varkappa)) <= tolerance(p.precision_bits, 2) * (1 + abs(g)));
      CHECK(abs(g - eval_g(y, x, p, -phi)) <= tolerance(p.precision_bits, 2) * (1 + abs(g)));
    }
  }
}

TEST_CASE("g times Q equals (t^2 + 1)^d P at t = cot(phi/d)") {
  for (auto [n, d] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}, {4, 3}}) {
    for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.7"))}) {
      auto p = make_params(n, d, lam);
      WorkingPrecision guard(p.precision_bits);
      auto poles = pole_system(p);
      auto q = build_q(poles);
      auto P = build_p(p, poles, q);
      for (int k = 0; k < 8; ++k) {
        Real x = uniform(0, 1), y = uniform(0, 1);
        Real phi = p.varkappa * uniform(-0.95, 0.95);
        Real t = cos(phi / d) / sin(phi / d);
        Real lhs = eval_g(x, y, p, phi) * q.expanded(t);
        Real rhs = pow(t * t + 1, d) * P.at(x, y)(t);
        INFO("n = ", n, ", d = ", d, ", lambda = ", to_string(lam));
        CHECK(abs(lhs - rhs) <= tolerance(p.precision_bits, 2) * (abs(lhs) + abs(rhs)));
      }
    }
  }
}

TEST_CASE("independent evaluation of f at doubled precision") {
  auto p = at_half_pi(2, 1);
  Real x("0.3"), y("0.15"), zeta("0.4");
  Real got = eval_f(x, y, p, zeta);

  WorkingPrecision guard(512);
  const Real P = pi();
  Real lambda = P / 2, eta = P / 4, X("0.3"), Y("0.15"), Z("0.4");
  Real alpha = 2;
  Real expected = X * sin(2 * eta) / (sin(Z + lambda - eta) * sin(Z + lambda + eta)) +
                  Y * sin(2 * eta) / (sin(Z) * sin(Z + 2 * eta)) -
                  sin(lambda + eta) / (sin(Z) * sin(Z + lambda + eta)) +
                  alpha * sin(alpha * (lambda - eta)) / (sin(alpha * Z) * sin(alpha * (Z + lambda - eta)));
  CHECK_CLOSE(got, expected, 1e-70);
}

TEST_CASE("f and g refuse to evaluate on a pole") {
  auto p = at_half_pi(2, 1);
  CHECK_THROWS_KIND(eval_f(Real("0.2"), Real("0.2"), p, Real(0)), ErrorKind::PoleHit);
  CHECK_THROWS_KIND(eval_g(Real("0.2"), Real("0.2"), p, p.varkappa), ErrorKind::PoleHit);
}

TEST_CASE("the symmetric point of the arctic circle") {
  auto p = at_half_pi(2, 1);
  WorkingPrecision guard(p.precision_bits);
  auto pt = solve_point(p, p.varkappa);
  Real expected = (2 - sqrt(Real(2))) / 4;
  CHECK_CLOSE(pt.x, expected, 1e-70);
  CHECK_CLOSE(pt.y, expected, 1e-70);
  CHECK_CLOSE(ellipse(pt.x, pt.y, p.varkappa), 0, 1e-70);
}

TEST_CASE("phi = 0 gives x = y for any model") {
  for (auto [n, d] : {std::pair{3, 1}, {3, 2}, {5, 2}, {5, 3}, {7, 2}}) {
    auto p = make_params(n, d, std::to_string(uniform(1.3, 1.8)));
    auto pt = solve_point(p, p.varkappa);
    CHECK_CLOSE(pt.x, pt.y, 1e-60);
  }
}

TEST_CASE("alpha = 3 samples satisfy the printed sextic") {
  auto p = at_half_pi(3, 1);
  XYPoly sextic = find_golden_case(builtin_golden_cases(), "alpha3").expected_curve();
  WorkingPrecision guard(p.precision_bits);
  Real scale = sextic.max_abs();
  for (int i = 1; i <= 50; ++i) {
    Real zeta = p.zeta_span() * i / 51;
    auto pt = solve_point(p, zeta);
    CHECK(abs(sextic(pt.x, pt.y)) / scale < tolerance(p.precision_bits, 4));
  }
}

TEST_CASE("two samples are the contact points") {
  for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.9"))}) {
    auto p = make_params(3, 2, lam);
    auto portion = sample_portion(p, 2);
    REQUIRE(portion.points.size() == 2);
    CHECK(portion.points[0].x == p.kappa);
    CHECK(portion.points[0].y == 0);
    CHECK(portion.points[1].x == 0);
    CHECK(portion.points[1].y == p.kappa);
  }
  CHECK_THROWS_KIND(sample_portion(at_half_pi(2, 1), 1), ErrorKind::BadInput);
}

TEST_CASE("arctic circle samples") {
  auto p = at_half_pi(2, 1);
  auto portion = sample_portion(p, 50);
  WorkingPrecision guard(p.precision_bits);
  for (const auto& pt : portion.points) {
    Real r2 = (pt.x - Real(1) / 2) * (pt.x - Real(1) / 2) + (pt.y - Real(1) / 2) * (pt.y - Real(1) / 2);
    CHECK_CLOSE(r2, Real(1) / 4, 1e-60);
    CHECK_CLOSE(ellipse(pt.x, pt.y, p.varkappa), 0, 1e-60);
  }
}

TEST_CASE("sample invariants") {
  for (auto [n, d] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}}) {
    for (const LambdaInput& lam : {LambdaInput(RationalAngle(1, 2)), LambdaInput(std::string("1.75"))}) {
      auto p = make_params(n, d, lam);
      auto portion = sample_portion(p, 41);
      WorkingPrecision guard(p.precision_bits);
      INFO("n = ", n, ", d = ", d, ", lambda = ", to_string(lam));
      CHECK(is_monotone(portion));
      CHECK(portion.warnings.empty());
      const Real tol = tolerance(p.precision_bits, 2);
      const Real pad = tolerance(p.precision_bits, 4);
      for (const auto& pt : portion.points) {
        CHECK(pt.residual_f < tol);
        CHECK(pt.residual_fprime < tol);
        CHECK(pt.x >= -pad);
        CHECK(pt.y >= -pad);
        CHECK(pt.x <= p.kappa + pad);
        CHECK(pt.y <= p.kappa + pad);
        CHECK_CLOSE(pt.phi, pt.zeta - p.varkappa, 1e-70);
      }
    }
  }
}

TEST_CASE("reversing zeta swaps the coordinates") {
  for (auto [n, d] : {std::pair{2, 1}, {5, 2}, {4, 3}}) {
    auto p = make_params(n, d, std::string("1.62"));
    auto pts = sample_portion(p, 30).points;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& a = pts[i];
      const auto& b = pts[pts.size() - 1 - i];
      CHECK_CLOSE(a.x, b.y, 1e-50);
      CHECK_CLOSE(a.y, b.x, 1e-50);
    }
  }
}

TEST_CASE("complete curve at lambda = pi/2 is invariant under both reflections") {
  auto p = at_half_pi(5, 2);
  auto nw = sample_portion(p, 20);
  auto all = complete_curve(nw, p);
  REQUIRE(all.size() == 4);
  CHECK(all[0].label == PortionLabel::NW);
  CHECK_FALSE(all[0].from_symmetry_assumption);
  for (size_t k = 1; k < 4; ++k) CHECK(all[k].from_symmetry_assumption);
  // NE is NW mirrored in x; SW is NW mirrored in y; SE mirrored in both.
  for (size_t i = 0; i < nw.points.size(); ++i) {
    const auto& a = nw.points[i];
    CHECK_CLOSE(all[1].points[i].x, 1 - a.x, 1e-60);
    CHECK_CLOSE(all[1].points[i].y, a.y, 1e-60);
    CHECK_CLOSE(all[2].points[i].x, 1 - a.x, 1e-60);
    CHECK_CLOSE(all[2].points[i].y, 1 - a.y, 1e-60);
    CHECK_CLOSE(all[3].points[i].x, a.x, 1e-60);
    CHECK_CLOSE(all[3].points[i].y, 1 - a.y, 1e-60);
  }
  CHECK_THROWS_KIND(complete_curve(all[1], p), ErrorKind::BadInput);
}

TEST_CASE("complete arctic circle and arctic ellipse") {
  for (const LambdaInput& lam :
       {LambdaInput(RationalAngle(1, 2)), LambdaInput(RationalAngle(2, 5)), LambdaInput(std::string("1.9"))}) {
    auto p = make_params(2, 1, lam);
    auto all = complete_curve(sample_portion(p, 25), p);
    WorkingPrecision guard(p.precision_bits);
    for (const auto& portion : all)
      for (const auto& pt : portion.points) {
        INFO(to_string(portion.label), " at lambda = ", to_string(lam));
        CHECK_CLOSE(ellipse(pt.x, pt.y, p.varkappa), 0, 1e-50);
      }
  }
}
