#include "arctic/poly_builder.hpp"

#include <algorithm>
#include <array>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

struct RootTerm {
  std::string label;
  AngleForm angle;
  Real root;
};

// Membership of the four denominators of g written in t:
//   D1 = Π(t − v_k)(t − u_k), D2 = Π(t + v_k)(t + u_k),
//   D3 = Π(t − v_k)(t + v_k), D4 = Π(t − w_j)(t + w_j).
using Denominators = std::array<std::vector<RootTerm>, 4>;

RootTerm plus(const Pole& p) { return {"+" + p.name(), p.angle, p.value}; }
RootTerm minus(const Pole& p) { return {"-" + p.name(), p.angle.negated(), -p.value}; }

Denominators denominators(const PoleSystem& poles) {
  Denominators dens;
  for (size_t k = 0; k < poles.v.size(); ++k) {
    dens[0].push_back(plus(poles.v[k]));
    dens[0].push_back(plus(poles.u[k]));
    dens[1].push_back(minus(poles.v[k]));
    dens[1].push_back(minus(poles.u[k]));
    dens[2].push_back(plus(poles.v[k]));
    dens[2].push_back(minus(poles.v[k]));
  }
  for (const Pole& w : poles.w) {
    dens[3].push_back(plus(w));
    dens[3].push_back(minus(w));
  }
  return dens;
}

bool same_root(const AngleForm& a, const AngleForm& b, const std::optional<RationalAngle>& theta) {
  if (theta) return a.resolve(*theta).equal_mod_pi(b.resolve(*theta));
  return structurally_equal_mod_pi(a, b);
}

Real cot_of(const AngleForm& angle, const Real& theta, const std::optional<RationalAngle>& theta_exact,
            const Real& pole_tol) {
  if (theta_exact) return cot(angle.resolve(*theta_exact));
  Real a = angle.value(theta);
  Real s = sin(a);
  if (abs(s) < pole_tol)
    throw Error(ErrorKind::PoleAtInfinity, "pole angle is a multiple of pi");
  return cos(a) / s;
}

NumPoly product_of(const std::vector<std::pair<Real, int>>& roots) {
  std::vector<Real> expanded;
  for (const auto& [root, mult] : roots)
    for (int i = 0; i < mult; ++i) expanded.push_back(root);
  return NumPoly::from_roots(expanded);
}

}  // namespace

Real AffineForm::max_abs() const { return abs_max(abs_max(c0, cx), cy); }

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  c0 += o.c0;
  cx += o.cx;
  cy += o.cy;
  return *this;
}

NumPoly TPoly::at(const Real& x, const Real& y) const {
  std::vector<Real> c;
  c.reserve(coeffs_.size());
  for (const AffineForm& f : coeffs_) c.push_back(f(x, y));
  return NumPoly(std::move(c));
}

NumPoly TPoly::part(int which) const {
  std::vector<Real> c;
  for (const AffineForm& f : coeffs_) c.push_back(which == 0 ? f.c0 : which == 1 ? f.cx : f.cy);
  return NumPoly(std::move(c));
}

Real TPoly::max_abs() const {
  Real m = 0;
  for (const AffineForm& f : coeffs_) m = abs_max(m, f.max_abs());
  return m;
}

TPoly TPoly::mirrored() const {
  std::vector<AffineForm> c;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    AffineForm f{coeffs_[k].c0, coeffs_[k].cy, coeffs_[k].cx};
    if (k % 2 == 1) f = Real(-1) * f;
    c.push_back(f);
  }
  return TPoly(std::move(c));
}

std::string Pole::name() const {
  char c = family == PoleFamily::V ? 'v' : family == PoleFamily::U ? 'u' : 'w';
  return std::string(1, c) + std::to_string(index);
}

std::string Coincidence::to_string() const { return a + (sign > 0 ? " = " : " = -") + b; }

bool PoleSystem::has(const std::string& a, const std::string& b, int sign) const {
  return std::any_of(coincidences.begin(), coincidences.end(), [&](const Coincidence& c) {
    return c.sign == sign && ((c.a == a && c.b == b) || (c.a == b && c.b == a));
  });
}

PoleSystem pole_system(const ModelParams& params) {
  WorkingPrecision guard(params.precision_bits);
  const Real pole_tol = tolerance(params.precision_bits, 2);
  const int n = params.n, d = params.d;

  PoleSystem ps;
  ps.precision_bits = params.precision_bits;
  ps.theta = params.varkappa / d;
  if (params.varkappa_exact) ps.theta_exact = Rational(1, d) * *params.varkappa_exact;

  auto make = [&](PoleFamily family, int index, RationalAngle offset) {
    Pole p{family, index, AngleForm{1, offset}, Real(0)};
    p.value = cot_of(p.angle, ps.theta, ps.theta_exact, pole_tol);
    return p;
  };
  const RationalAngle two_eta_over_d(n - d, static_cast<std::int64_t>(n) * d);
  for (int k = 0; k < d; ++k) {
    ps.v.push_back(make(PoleFamily::V, k, RationalAngle(k, d)));
    ps.u.push_back(make(PoleFamily::U, k, two_eta_over_d + RationalAngle(k, d)));
  }
  for (int j = 0; j < n; ++j) ps.w.push_back(make(PoleFamily::W, j, RationalAngle(j, n)));

  const Real two_eta = 2 * params.eta_value();
  ps.rho = sin(Rational(2) * params.eta) / (sin(params.varkappa) * sin(params.varkappa + two_eta));

  std::vector<const Pole*> all;
  for (const auto* fam : {&ps.v, &ps.u, &ps.w})
    for (const Pole& p : *fam) all.push_back(&p);

  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      const Pole& a = *all[i];
      const Pole& b = *all[j];
      for (int sign : {1, -1}) {
        AngleForm target = sign > 0 ? b.angle : b.angle.negated();
        if (same_root(a.angle, target, ps.theta_exact)) {
          ps.coincidences.push_back({a.name(), b.name(), sign, true});
          continue;
        }
        Real gap = abs(a.value - sign * b.value);
        if (gap <= pole_tol * (1 + abs(a.value)))
          ps.near_coincidences.push_back({a.name(), b.name(), sign, false});
      }
    }
  }
  return ps;
}

QPoly build_q(const PoleSystem& poles) {
  WorkingPrecision guard(poles.precision_bits);
  Denominators dens = denominators(poles);

  QPoly q;
  for (int i = 0; i < 4; ++i) {
    // count occurrences of each class in this denominator
    std::vector<int> counts(q.factors.size(), 0);
    for (const RootTerm& term : dens[static_cast<size_t>(i)]) {
      auto it = std::find_if(q.factors.begin(), q.factors.end(), [&](const QFactor& f) {
        return same_root(f.angle, term.angle, poles.theta_exact);
      });
      if (it == q.factors.end()) {
        q.factors.push_back({term.label, term.angle, term.root, 0});
        counts.push_back(1);
      } else {
        ++counts[static_cast<size_t>(it - q.factors.begin())];
      }
    }
    for (size_t f = 0; f < q.factors.size(); ++f)
      q.factors[f].multiplicity = std::max(q.factors[f].multiplicity, counts[f]);
  }

  std::vector<std::pair<Real, int>> roots;
  for (const QFactor& f : q.factors) roots.emplace_back(f.root, f.multiplicity);
  q.expanded = product_of(roots);
  return q;
}

TPoly build_p(const ModelParams& params, const PoleSystem& poles, const QPoly& q) {
  WorkingPrecision guard(params.precision_bits);
  Denominators dens = denominators(poles);

  // Q / D_i as a product of the remaining linear factors.
  std::array<NumPoly, 4> cofactor;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> remaining;
    for (const QFactor& f : q.factors) remaining.push_back(f.multiplicity);
    for (const RootTerm& term : dens[static_cast<size_t>(i)]) {
      for (size_t f = 0; f < q.factors.size(); ++f) {
        if (same_root(q.factors[f].angle, term.angle, poles.theta_exact)) {
          --remaining[f];
          break;
        }
      }
    }
    std::vector<std::pair<Real, int>> roots;
    for (size_t f = 0; f < q.factors.size(); ++f) {
      if (remaining[f] < 0)
        throw Error(ErrorKind::DegreeOverflow, "denominator does not divide Q");
      roots.emplace_back(q.factors[f].root, remaining[f]);
    }
    cofactor[static_cast<size_t>(i)] = product_of(roots);
  }

  const Real alpha = params.alpha_value();
  const Real& vk = params.varkappa;
  Real cot_vk, cot_alpha_vk;
  if (params.varkappa_exact) {
    cot_vk = cot(*params.varkappa_exact);
    cot_alpha_vk = cot(params.alpha * *params.varkappa_exact);
  } else {
    cot_vk = cos(vk) / sin(vk);
    cot_alpha_vk = cos(alpha * vk) / sin(alpha * vk);
  }

  // (t² + 1)^(n − d)
  NumPoly t2p1({Real(1), Real(0), Real(1)});
  NumPoly power({Real(1)});
  for (int i = 0; i < params.n - params.d; ++i) power = power * t2p1;
  NumPoly last = (2 * alpha * cot_alpha_vk) * (power * cofactor[3]);
  NumPoly third = (-2 * cot_vk) * cofactor[2];
  NumPoly constant = last + third;

  size_t len = std::max({cofactor[0].coeffs().size(), cofactor[1].coeffs().size(),
                         constant.coeffs().size()});
  std::vector<AffineForm> coeffs(len);
  for (size_t k = 0; k < len; ++k) {
    if (k < cofactor[0].coeffs().size()) coeffs[k].cx = poles.rho * cofactor[0].coeffs()[k];
    if (k < cofactor[1].coeffs().size()) coeffs[k].cy = poles.rho * cofactor[1].coeffs()[k];
    if (k < constant.coeffs().size()) coeffs[k].c0 = constant.coeffs()[k];
  }

  Real scale = 0;
  for (const AffineForm& f : coeffs) scale = abs_max(scale, f.max_abs());
  Real cutoff = scale * tolerance(params.precision_bits, 2);
  while (coeffs.size() > 1 && coeffs.back().max_abs() <= cutoff) coeffs.pop_back();

  const int bound = 2 * params.d + 2 * params.n - 4;
  if (static_cast<int>(coeffs.size()) - 1 > bound)
    throw Error(ErrorKind::DegreeOverflow, "P(t) has degree " + std::to_string(coeffs.size() - 1) +
                                               " > 2d + 2n - 4 = " + std::to_string(bound));
  return TPoly(std::move(coeffs));
}

DegreeReport assert_degrees(const ModelParams& params, const TPoly& p) {
  DegreeReport r;
  r.deg_p = p.degree();
  r.generic_bound = 2 * params.d + 2 * params.n - 4;
  r.curve_degree_bound = 4 * (params.n + params.d) - 10;
  r.leading = p.leading();
  r.half_integer_symmetric = params.d == 2 && params.n % 2 == 1 && params.lambda_exact &&
                             *params.lambda_exact == RationalAngle(1, 2);
  if (r.half_integer_symmetric) r.expected_exact = 2 * params.n - 4;

  if (r.deg_p > r.generic_bound)
    throw Error(ErrorKind::DegreeBoundViolated, "deg P = " + std::to_string(r.deg_p) +
                                                    " exceeds 2d + 2n - 4 = " +
                                                    std::to_string(r.generic_bound));
  if (r.expected_exact && r.deg_p != *r.expected_exact)
    throw Error(ErrorKind::DegreeBoundViolated, "deg P = " + std::to_string(r.deg_p) +
                                                    " but alpha = n/2 at lambda = pi/2 requires " +
                                                    std::to_string(*r.expected_exact));
  return r;
}

}  // namespace arctic
