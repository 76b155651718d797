#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "arctic/curve_identify.hpp"
#include "arctic/errors.hpp"

namespace py = pybind11;
using namespace arctic;

namespace {

int digits_for(int bits) { return static_cast<int>(bits * 0.30103); }

// Stores v under `key` as a float and under `key_hp` as a decimal string.
void put(py::dict& d, const std::string& key, const Real& v, int bits) {
  d[py::str(key)] = static_cast<double>(v);
  d[py::str(key + "_hp")] = to_sci(v, digits_for(bits));
}

ModelParams model(int n, int d, const std::string& lambda, int bits) {
  return make_params(n, d, parse_lambda(lambda), bits);
}

py::list xy_coefficients(const XYPoly& p, int bits) {
  py::list out;
  for (auto [i, j] : XYPoly::monomials(p.total_degree())) {
    Real c = p.coefficient(i, j);
    if (c == 0) continue;
    py::dict e;
    e["i"] = i;
    e["j"] = j;
    put(e, "value", c, bits);
    out.append(e);
  }
  return out;
}

py::dict params_dict(int n, int d, const std::string& lambda, int bits) {
  ModelParams p = model(n, d, lambda, bits);
  Weights w = weights(p);
  py::dict out;
  out["n"] = p.n;
  out["d"] = p.d;
  out["precision_bits"] = p.precision_bits;
  out["lambda"] = p.lambda_text;
  out["lambda_exact"] = p.is_exact();
  out["eta"] = p.eta.to_string();
  out["alpha"] = std::to_string(p.alpha.numerator()) + "/" + std::to_string(p.alpha.denominator());
  put(out, "lambda_value", p.lambda, bits);
  put(out, "varkappa", p.varkappa, bits);
  put(out, "delta", p.delta, bits);
  put(out, "kappa", p.kappa, bits);
  put(out, "a", w.a, bits);
  put(out, "b", w.b, bits);
  put(out, "c", w.c, bits);
  return out;
}

py::list sample_list(int n, int d, const std::string& lambda, int count, bool all_portions, int bits) {
  ModelParams p = model(n, d, lambda, bits);
  CurvePortion nw = sample_portion(p, count);
  std::vector<CurvePortion> portions{nw};
  if (all_portions) portions = complete_curve(nw, p);
  py::list out;
  for (const CurvePortion& portion : portions)
    for (const ParamPoint& pt : portion.points) {
      py::dict e;
      e["portion"] = to_string(portion.label);
      put(e, "zeta", pt.zeta, bits);
      put(e, "x", pt.x, bits);
      put(e, "y", pt.y, bits);
      out.append(e);
    }
  return out;
}

py::dict p_dict(int n, int d, const std::string& lambda, int bits) {
  ModelParams p = model(n, d, lambda, bits);
  PoleSystem poles = pole_system(p);
  QPoly q = build_q(poles);
  TPoly tp = build_p(p, poles, q);
  DegreeReport deg = assert_degrees(p, tp);
  py::dict out;
  py::list coeffs;
  for (const AffineForm& f : tp.coeffs()) {
    py::dict e;
    put(e, "c0", f.c0, bits);
    put(e, "cx", f.cx, bits);
    put(e, "cy", f.cy, bits);
    coeffs.append(e);
  }
  py::list coincidences;
  for (const Coincidence& c : poles.coincidences) coincidences.append(c.to_string());
  out["coefficients"] = coeffs;
  out["deg_P"] = deg.deg_p;
  out["deg_Q"] = q.degree();
  out["generic_bound"] = deg.generic_bound;
  out["coincidences"] = coincidences;
  return out;
}

Real discriminant_of(const std::vector<std::string>& coeffs, const std::string& method, int bits) {
  WorkingPrecision guard(bits);
  std::vector<Real> c;
  for (const std::string& s : coeffs) c.push_back(parse_real(s));
  NumPoly p(std::move(c));
  if (method == "reduced") return discriminant(p);
  if (method == "derivative") return discriminant_via_derivative(p);
  if (method == "roots") return discriminant_via_roots(p);
  throw Error(ErrorKind::BadInput, "unknown method '" + method + "' (reduced, derivative, roots)");
}

py::dict surface_dict(int n, int d, const std::string& lambda, int bits) {
  ModelParams p = model(n, d, lambda, bits);
  PoleSystem poles = pole_system(p);
  TPoly tp = build_p(p, poles, build_q(poles));
  DiscriminantSurface s = discriminant_surface(tp, bits);
  py::dict out;
  out["deg_P"] = tp.degree();
  out["degree"] = s.poly.total_degree();
  out["coefficients"] = xy_coefficients(s.poly.normalized_max(), bits);
  put(out, "fit_residual", s.fit_residual, bits);
  put(out, "symmetry_deviation", s.poly.symmetry_deviation(), bits);
  return out;
}

py::dict report_dict(const CurveReport& r) {
  const int bits = r.precision_bits;
  py::dict out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["lambda"] = r.lambda;
  out["deg_P"] = r.degrees.deg_p;
  out["surface_degree"] = r.surface_degree;
  out["curve_degree"] = r.fit.degree;
  out["coefficients"] = xy_coefficients(r.fit.curve, bits);
  put(out, "fit_residual", r.fit.residual, bits);
  put(out, "on_curve_max", r.fit_on_curve_max, bits);
  put(out, "surface_on_curve_max", r.surface_on_curve_max, bits);
  if (r.division_remainder) put(out, "division_remainder", *r.division_remainder, bits);
  out["samples_checked"] = r.samples_checked;
  out["samples_arctic"] = r.samples_arctic;
  py::list comps;
  for (const ComponentVerdict& v : r.components) {
    py::dict c;
    put(c, "x", v.x, bits);
    put(c, "y", v.y, bits);
    c["at_infinity"] = v.at_infinity;
    if (!v.at_infinity) {
      put(c, "root_re", v.double_root.real(), bits);
      put(c, "root_im", v.double_root.imag(), bits);
    }
    c["classification"] = to_string(v.classification);
    comps.append(c);
  }
  out["components"] = comps;
  if (r.golden) {
    py::dict g;
    g["name"] = r.golden->name;
    g["passed"] = r.golden->passed();
    put(g, "max_deviation", r.golden->max_deviation, bits);
    g["failures"] = r.golden->failures;
    out["golden"] = g;
  }
  out["component_structure_verified"] = r.component_structure_verified;
  out["warnings"] = r.warnings;
  return out;
}

py::list rationalize_list(int n, int d, const std::string& lambda, const std::vector<std::int64_t>& radicands,
                          int bits) {
  CurveOptions opt;
  opt.compute_surface = false;
  CurveReport r = run_pipeline(model(n, d, lambda, bits), opt);
  RationalizationTable t = rationalize_coefficients(r.fit.curve, radicands, bits);
  py::list out;
  for (const RationalEntry& e : t.entries) {
    py::dict row;
    row["i"] = e.i;
    row["j"] = e.j;
    row["ok"] = e.ok;
    if (e.ok) row["exact"] = e.exact.to_string();
    put(row, "value", e.value, bits);
    put(row, "residual", e.residual, bits);
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_arctic, m) {
  m.doc() = "Arctic curves of the six-vertex model at roots of unity";

  py::exception<Error>(m, "ArcticError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("arctic._arctic").attr("ArcticError");
      py::object exc = cls(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("exit_code") = exit_code(e.kind());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  constexpr int kBits = kDefaultPrecisionBits;

  m.def("params", &params_dict, py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("precision_bits") = kBits,
        "Model parameters, weights, delta and the contact point.");
  m.def("sample", &sample_list, py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("count") = 100,
        py::arg("all_portions") = false, py::arg("precision_bits") = kBits,
        "Points of the NW portion (or all four portions).");
  m.def("build_p", &p_dict, py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("precision_bits") = kBits,
        "Coefficients of P(t) as affine forms c0 + cx*x + cy*y, lowest power first.");
  m.def(
      "discriminant",
      [](const std::vector<std::string>& coeffs, const std::string& method, int bits) {
        Real v = discriminant_of(coeffs, method, bits);
        return py::make_tuple(static_cast<double>(v), to_sci(v, digits_for(bits)));
      },
      py::arg("coeffs"), py::arg("method") = "reduced", py::arg("precision_bits") = kBits,
      "Discriminant of sum c_k t^k (coefficients as decimal strings, lowest first); returns (float, str).");
  m.def("surface", &surface_dict, py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("precision_bits") = kBits,
        "Discriminant surface, largest coefficient normalised to +-1.");
  m.def(
      "curve",
      [](int n, int d, const std::string& lam, bool golden, int bits) {
        ModelParams p = model(n, d, lam, bits);
        const GoldenCase* gc = nullptr;
        if (golden) {
          gc = match_golden_case(builtin_golden_cases(), p.n, p.d, p.lambda_text);
          if (!gc) throw Error(ErrorKind::BadInput, "no golden case for these parameters");
        }
        CurveReport r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(p);
          if (gc) r.golden = compare_with_golden(r, *gc);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("d"), py::arg("lam"), py::arg("golden") = false, py::arg("precision_bits") = kBits,
      "Full pipeline report; golden=True adds the comparison with the matching embedded case.");
  m.def(
      "verify_golden",
      [](const std::string& name, int bits) {
        const GoldenCase& g = find_golden_case(builtin_golden_cases(), name);
        CurveReport r;
        {
          py::gil_scoped_release release;
          r = verify_golden(g, bits);
        }
        return report_dict(r);
      },
      py::arg("name"), py::arg("precision_bits") = kBits,
      "Runs one embedded golden case; raises ArcticError on mismatch.");
  m.def(
      "golden_cases",
      [] {
        std::vector<std::string> names;
        for (const GoldenCase& g : builtin_golden_cases().cases) names.push_back(g.name);
        return names;
      },
      "Names of the embedded golden cases.");
  m.def("rationalize", &rationalize_list, py::arg("n"), py::arg("d"), py::arg("lam"),
        py::arg("radicands") = std::vector<std::int64_t>{}, py::arg("precision_bits") = kBits,
        "Fits the minimal curve and tries to recognise each coefficient as (p + q sqrt(D))/s.");
}
