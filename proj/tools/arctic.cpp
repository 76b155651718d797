// arctic: command-line front end for the arctic-curve pipeline.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arctic/curve_identify.hpp"
#include "arctic/errors.hpp"
#include "arctic/golden.hpp"
#include "arctic/model_params.hpp"
#include "arctic/parametric_curve.hpp"
#include "arctic/poly_builder.hpp"
#include "arctic/resultants.hpp"
#include "svg_plot.hpp"

using namespace arctic;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int d = 0;
  std::string lambda;
  int precision_bits = kDefaultPrecisionBits;
  int samples = 0;
  std::string tol;
  std::string format;
  std::string out;
  std::string portions = "all";
  bool golden = false;
  std::string golden_case = "all";
  std::string golden_file;
  std::string radicands;
};

int digits_for(int bits) { return static_cast<int>(bits * 0.30103); }

std::string hp(const Real& v, int bits) { return to_sci(v, digits_for(bits)); }

// Key with a double for quick use and a full-precision string next to it.
void put(ojson& j, const std::string& key, const Real& v, int bits) {
  j[key] = v.convert_to<double>();
  j[key + "_hp"] = hp(v, bits);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorKind::BadInput, "cannot write " + cfg.out);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ModelParams params_from(const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw Error(ErrorKind::BadInput, "--lambda is required");
  return make_params(cfg.n, cfg.d, parse_lambda(cfg.lambda), cfg.precision_bits);
}

std::vector<PortionLabel> parse_portions(const std::string& spec) {
  if (spec == "all") return {PortionLabel::NW, PortionLabel::NE, PortionLabel::SE, PortionLabel::SW};
  std::vector<PortionLabel> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    for (char& c : item) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (item == "nw") out.push_back(PortionLabel::NW);
    else if (item == "ne") out.push_back(PortionLabel::NE);
    else if (item == "se") out.push_back(PortionLabel::SE);
    else if (item == "sw") out.push_back(PortionLabel::SW);
    else throw Error(ErrorKind::BadInput, "unknown portion '" + item + "' (use nw, ne, se, sw or all)");
  }
  return out;
}

std::vector<std::pair<double, double>> to_doubles(const std::vector<ParamPoint>& pts) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pts) out.emplace_back(p.x.convert_to<double>(), p.y.convert_to<double>());
  return out;
}

const char* portion_color(PortionLabel l) {
  switch (l) {
    case PortionLabel::NW: return "#1f77b4";
    case PortionLabel::NE: return "#2ca02c";
    case PortionLabel::SE: return "#9467bd";
    case PortionLabel::SW: return "#ff7f0e";
  }
  return "#000";
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) { return cfg.format.empty() ? fallback : cfg.format; }

ojson alpha_json(const ModelParams& p) { return ojson{{"n", p.n}, {"d", p.d}}; }

// ---------------------------------------------------------------------------

int cmd_params(const RunConfig& cfg) {
  ModelParams p = params_from(cfg);
  WorkingPrecision guard(p.precision_bits);
  const int bits = p.precision_bits;
  Weights w = weights(p);
  ojson j;
  j["alpha"] = alpha_json(p);
  j["precision_bits"] = bits;
  j["lambda"] = p.lambda_text;
  j["lambda_exact"] = p.is_exact();
  put(j, "lambda_value", p.lambda, bits);
  j["eta"] = p.eta.to_string();
  put(j, "eta_value", p.eta_value(), bits);
  j["varkappa"] = p.varkappa_exact ? ojson(p.varkappa_exact->to_string()) : ojson(nullptr);
  put(j, "varkappa_value", p.varkappa, bits);
  put(j, "delta", p.delta, bits);
  put(j, "kappa", p.kappa, bits);
  ojson jw;
  put(jw, "a", w.a, bits);
  put(jw, "b", w.b, bits);
  put(jw, "c", w.c, bits);
  j["weights"] = jw;
  put(j, "delta_from_weights", delta_from_weights(w), bits);

  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json") {
    emit(cfg, dump(j));
  } else if (fmt == "text") {
    std::ostringstream os;
    os << "alpha = " << p.n << "/" << p.d << "\nlambda = " << p.lambda_text << "\neta = " << p.eta.to_string()
       << "\nvarkappa = " << hp(p.varkappa, bits) << "\ndelta = " << hp(p.delta, bits) << "\nkappa = " << hp(p.kappa, bits)
       << "\na = " << hp(w.a, bits) << "\nb = " << hp(w.b, bits) << "\nc = " << hp(w.c, bits) << "\n";
    emit(cfg, os.str());
  } else {
    throw Error(ErrorKind::BadInput, "params supports --format json|text");
  }
  return 0;
}

int cmd_sample(const RunConfig& cfg) {
  ModelParams p = params_from(cfg);
  WorkingPrecision guard(p.precision_bits);
  const int bits = p.precision_bits;
  const int count = cfg.samples > 0 ? cfg.samples : 100;
  CurvePortion nw = sample_portion(p, count);
  std::vector<PortionLabel> wanted = parse_portions(cfg.portions);
  std::vector<CurvePortion> portions;
  bool need_others = std::any_of(wanted.begin(), wanted.end(), [](PortionLabel l) { return l != PortionLabel::NW; });
  std::vector<CurvePortion> all = need_others ? complete_curve(nw, p) : std::vector<CurvePortion>{nw};
  for (PortionLabel l : wanted)
    for (const auto& c : all)
      if (c.label == l) portions.push_back(c);
  for (const auto& c : portions)
    for (const auto& w : c.warnings) std::cerr << "warning: " << to_string(c.label) << ": " << w << "\n";

  const std::string fmt = format_or(cfg, "csv");
  if (fmt == "csv") {
    const int decimals = bits / 3;
    std::ostringstream os;
    os << "portion,zeta,x,y\n";
    for (const auto& c : portions)
      for (const auto& pt : c.points)
        os << to_string(c.label) << "," << to_fixed(pt.zeta, decimals) << "," << to_fixed(pt.x, decimals) << ","
           << to_fixed(pt.y, decimals) << "\n";
    emit(cfg, os.str());
  } else if (fmt == "json") {
    ojson j;
    j["alpha"] = alpha_json(p);
    j["lambda"] = p.lambda_text;
    put(j, "kappa", p.kappa, bits);
    ojson arr = ojson::array();
    for (const auto& c : portions) {
      ojson jc;
      jc["label"] = to_string(c.label);
      jc["from_symmetry_assumption"] = c.from_symmetry_assumption;
      jc["warnings"] = c.warnings;
      ojson pts = ojson::array();
      for (const auto& pt : c.points) pts.push_back(ojson{{"zeta", hp(pt.zeta, bits)}, {"x", hp(pt.x, bits)}, {"y", hp(pt.y, bits)}});
      jc["points"] = pts;
      arr.push_back(jc);
    }
    j["portions"] = arr;
    emit(cfg, dump(j));
  } else if (fmt == "svg") {
    tools::SvgPlot plot;
    plot.title("alpha = " + std::to_string(p.n) + "/" + std::to_string(p.d) + ", lambda = " + p.lambda_text);
    plot.square();
    for (const auto& c : portions) {
      auto pts = to_doubles(c.points);
      plot.polyline(pts, portion_color(c.label));
      plot.marker(pts.front().first, pts.front().second, "#d62728");
      plot.marker(pts.back().first, pts.back().second, "#d62728");
      const auto& mid = pts[pts.size() / 2];
      plot.label(mid.first, mid.second, to_string(c.label), portion_color(c.label));
    }
    emit(cfg, plot.str());
  } else {
    throw Error(ErrorKind::BadInput, "sample supports --format csv|json|svg");
  }
  return 0;
}

int cmd_poly(const RunConfig& cfg) {
  ModelParams p = params_from(cfg);
  WorkingPrecision guard(p.precision_bits);
  const int bits = p.precision_bits;
  PoleSystem poles = pole_system(p);
  QPoly q = build_q(poles);
  TPoly tp = build_p(p, poles, q);
  DegreeReport deg = assert_degrees(p, tp);

  ojson j;
  j["alpha"] = alpha_json(p);
  j["lambda"] = p.lambda_text;
  ojson jp = ojson::array();
  for (const auto* fam : {&poles.v, &poles.u, &poles.w})
    for (const auto& pole : *fam) jp.push_back(ojson{{"name", pole.name()}, {"value", hp(pole.value, bits)}});
  j["poles"] = jp;
  put(j, "rho", poles.rho, bits);
  ojson jc = ojson::array(), jn = ojson::array();
  for (const auto& c : poles.coincidences) jc.push_back(c.to_string());
  for (const auto& c : poles.near_coincidences) jn.push_back(c.to_string());
  j["coincidences"] = jc;
  j["near_coincidences"] = jn;
  ojson jq = ojson::array();
  for (const auto& f : q.factors)
    jq.push_back(ojson{{"label", f.label}, {"root", hp(f.root, bits)}, {"multiplicity", f.multiplicity}});
  j["deg_Q"] = q.degree();
  j["Q_factors"] = jq;
  j["deg_P"] = deg.deg_p;
  j["degree_bounds"] = ojson{{"generic", deg.generic_bound},
                             {"curve", deg.curve_degree_bound},
                             {"half_integer_symmetric", deg.half_integer_symmetric},
                             {"expected_exact", deg.expected_exact ? ojson(*deg.expected_exact) : ojson(nullptr)}};
  ojson coeffs = ojson::array();
  for (int k = 0; k <= tp.degree(); ++k)
    coeffs.push_back(ojson{{"k", k}, {"c0", hp(tp[k].c0, bits)}, {"cx", hp(tp[k].cx, bits)}, {"cy", hp(tp[k].cy, bits)}});
  j["P"] = coeffs;

  if (format_or(cfg, "json") != "json") throw Error(ErrorKind::BadInput, "poly supports --format json");
  emit(cfg, dump(j));
  return 0;
}

ojson poly_json(const XYPoly& poly, int bits) {
  ojson arr = ojson::array();
  for (auto [i, j] : XYPoly::monomials(poly.total_degree())) {
    Real c = poly.coefficient(i, j);
    if (c == 0) continue;
    arr.push_back(ojson{{"i", i}, {"j", j}, {"value", hp(c, bits)}});
  }
  return arr;
}

int cmd_disc(const RunConfig& cfg) {
  ModelParams p = params_from(cfg);
  WorkingPrecision guard(p.precision_bits);
  const int bits = p.precision_bits;
  PoleSystem poles = pole_system(p);
  TPoly tp = build_p(p, poles, build_q(poles));
  DegreeReport deg = assert_degrees(p, tp);
  DiscriminantSurface s = discriminant_surface(tp, bits);

  ojson j;
  j["alpha"] = alpha_json(p);
  j["lambda"] = p.lambda_text;
  j["deg_P"] = deg.deg_p;
  j["surface_degree"] = s.poly.total_degree();
  j["line_degree"] = discriminant_degree_along_line(tp, bits);
  j["nodes"] = s.node_count;
  j["replaced_nodes"] = s.replaced_nodes;
  j["fit_residual"] = to_sci(s.fit_residual, 6);
  j["condition_estimate"] = to_sci(s.condition_estimate, 6);
  j["symmetry_deviation"] = to_sci(s.poly.symmetry_deviation(), 6);
  j["coefficients"] = poly_json(s.poly.normalized_max(), bits);
  j["events"] = s.events;
  if (format_or(cfg, "json") != "json") throw Error(ErrorKind::BadInput, "disc supports --format json");
  emit(cfg, dump(j));
  return 0;
}

ojson verdict_json(const ComponentVerdict& v, int bits) {
  ojson j;
  j["point"] = ojson::array({hp(v.x, bits), hp(v.y, bits)});
  if (v.at_infinity) j["double_root"] = "inf";
  else j["double_root"] = ojson{{"re", hp(v.double_root.real(), bits)}, {"im", hp(v.double_root.imag(), bits)}};
  j["is_real"] = v.is_real;
  j["in_interval"] = v.in_interval;
  j["classification"] = to_string(v.classification);
  return j;
}

std::vector<std::int64_t> parse_radicands(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "bad radicand '" + item + "'");
    }
  }
  return out;
}

const GoldenFile& golden_file(const RunConfig& cfg) {
  static GoldenFile loaded;
  if (cfg.golden_file.empty()) return builtin_golden_cases();
  loaded = load_golden_cases(cfg.golden_file);
  return loaded;
}

int cmd_curve(const RunConfig& cfg) {
  ModelParams p = params_from(cfg);
  WorkingPrecision guard(p.precision_bits);
  const int bits = p.precision_bits;
  CurveOptions opts;
  opts.samples = cfg.samples;
  if (!cfg.tol.empty()) opts.fit_tolerance = parse_real(cfg.tol);
  CurveReport rep = run_pipeline(p, opts);

  if (cfg.golden) {
    const GoldenCase* gc = match_golden_case(golden_file(cfg), p.n, p.d, p.lambda_text);
    if (!gc) throw Error(ErrorKind::BadInput, "no golden case for these parameters");
    rep.golden = compare_with_golden(rep, *gc);
  }

  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json") {
    ojson j;
    j["alpha"] = alpha_json(p);
    j["lambda"] = p.lambda_text;
    put(j, "kappa", p.kappa, bits);
    j["deg_P"] = rep.degrees.deg_p;
    j["surface_degree"] = rep.surface_degree;
    j["curve_degree"] = rep.fit.degree;
    j["coefficients"] = poly_json(rep.fit.curve, bits);
    ojson comps = ojson::array();
    for (const auto& v : rep.components) comps.push_back(verdict_json(v, bits));
    j["components"] = comps;
    j["samples_classified"] = ojson{{"checked", rep.samples_checked}, {"arctic", rep.samples_arctic}};
    ojson res;
    res["fit"] = to_sci(rep.fit.residual, 6);
    res["on_curve_max"] = to_sci(rep.fit_on_curve_max, 6);
    if (rep.surface) res["surface_on_curve_max"] = to_sci(rep.surface_on_curve_max, 6);
    if (rep.division_remainder) res["division_remainder"] = to_sci(*rep.division_remainder, 6);
    res["symmetry"] = to_sci(rep.symmetry_deviation, 6);
    j["residuals"] = res;
    j["coincidences"] = rep.coincidences;
    j["component_structure_verified"] = rep.component_structure_verified;
    if (!cfg.radicands.empty()) {
      RationalizationTable t = rationalize_coefficients(rep.fit.curve, parse_radicands(cfg.radicands), bits);
      ojson jt;
      jt["all_recognised"] = t.all_ok();
      jt["common_denominator"] = t.common_denominator;
      ojson entries = ojson::array();
      if (t.all_ok()) {
        for (const auto& e : t.integer_table()) entries.push_back(ojson{{"i", e.i}, {"j", e.j}, {"value", e.value.to_string()}});
      } else {
        for (const auto& e : t.entries)
          entries.push_back(ojson{{"i", e.i}, {"j", e.j}, {"ok", e.ok}, {"value", e.ok ? e.exact.to_string() : hp(e.value, bits)}});
      }
      jt["coefficients"] = entries;
      j["exact"] = jt;
    }
    if (rep.golden) {
      j["golden"] = ojson{{"name", rep.golden->name},
                          {"max_deviation", rep.golden->max_deviation.convert_to<double>()},
                          {"passed", rep.golden->passed()},
                          {"failures", rep.golden->failures}};
    }
    j["warnings"] = rep.warnings;
    emit(cfg, dump(j));
  } else if (fmt == "svg") {
    tools::SvgPlot plot;
    plot.title("alpha = " + std::to_string(p.n) + "/" + std::to_string(p.d) + ", lambda = " + p.lambda_text +
               ", degree " + std::to_string(rep.fit.degree));
    plot.square();
    std::vector<std::pair<std::pair<int, int>, double>> terms;
    for (auto [i, jj] : XYPoly::monomials(rep.fit.degree)) {
      double c = rep.fit.curve.coefficient(i, jj).convert_to<double>();
      if (c != 0) terms.push_back({{i, jj}, c});
    }
    auto f = [&](double x, double y) {
      double s = 0;
      for (const auto& [e, c] : terms) s += c * std::pow(x, e.first) * std::pow(y, e.second);
      return s;
    };
    plot.segments(tools::contour_zero(f), "#999");
    CurvePortion nw = sample_portion(p, cfg.samples > 0 ? cfg.samples : 60);
    plot.dots(to_doubles(nw.points), portion_color(PortionLabel::NW));
    plot.marker(p.kappa.convert_to<double>(), 0, "#d62728");
    plot.marker(0, p.kappa.convert_to<double>(), "#d62728");
    for (const auto& v : rep.components)
      if (v.classification == Classification::Spurious)
        plot.marker(v.x.convert_to<double>(), v.y.convert_to<double>(), "#000", 4);
    emit(cfg, plot.str());
  } else {
    throw Error(ErrorKind::BadInput, "curve supports --format json|svg");
  }
  if (rep.golden && !rep.golden->passed()) {
    for (const auto& f : rep.golden->failures) std::cerr << "golden mismatch: " << f << "\n";
    return exit_code(ErrorKind::GoldenMismatch);
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const GoldenFile& file = golden_file(cfg);
  std::vector<const GoldenCase*> cases;
  if (cfg.golden_case == "all") {
    for (const auto& c : file.cases) cases.push_back(&c);
  } else {
    cases.push_back(&find_golden_case(file, cfg.golden_case));
  }
  const std::string fmt = format_or(cfg, "text");
  ojson arr = ojson::array();
  std::ostringstream os;
  bool all_passed = true;
  for (const auto* c : cases) {
    ojson j{{"name", c->name}};
    try {
      CurveReport rep = verify_golden(*c, cfg.precision_bits);
      j["passed"] = true;
      j["deg_P"] = rep.degrees.deg_p;
      j["curve_degree"] = rep.fit.degree;
      j["max_deviation"] = rep.golden->max_deviation.convert_to<double>();
      os << "PASS " << c->name << "  deg P " << rep.degrees.deg_p << ", curve degree " << rep.fit.degree
         << ", max deviation " << to_sci(rep.golden->max_deviation, 3) << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GoldenMismatch) throw;
      all_passed = false;
      j["passed"] = false;
      j["failures"] = e.what();
      os << "FAIL " << e.what() << "\n";
    }
    arr.push_back(j);
  }
  if (fmt == "json") emit(cfg, dump(ojson{{"precision_bits", cfg.precision_bits}, {"cases", arr}}));
  else emit(cfg, os.str());
  return all_passed ? 0 : exit_code(ErrorKind::GoldenMismatch);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arctic curves of the six-vertex model at roots of unity"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool model) {
    if (model) {
      sub->add_option("--n", cfg.n, "numerator of alpha = n/d")->required();
      sub->add_option("--d", cfg.d, "denominator of alpha = n/d")->required();
      sub->add_option("--lambda", cfg.lambda, "rapidity: \"p/q pi\" or decimal radians")->required();
    }
    sub->add_option("--precision-bits", cfg.precision_bits, "working precision in bits")
        ->envname("ARCTIC_PRECISION_BITS")
        ->default_val(kDefaultPrecisionBits);
    sub->add_option("--format", cfg.format, "output format: csv, json, svg or text");
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };

  auto* params = app.add_subcommand("params", "model parameters, weights, delta and contact point");
  common(params, true);
  auto* sample = app.add_subcommand("sample", "points of the parametric curve");
  common(sample, true);
  sample->add_option("--samples", cfg.samples, "points per portion (default 100)");
  sample->add_option("--portions", cfg.portions, "all or a comma list of nw,ne,se,sw");
  auto* poly = app.add_subcommand("poly", "poles, coincidences, Q(t) and P(t)");
  common(poly, true);
  auto* disc = app.add_subcommand("disc", "discriminant surface of P(t)");
  common(disc, true);
  auto* curve = app.add_subcommand("curve", "full pipeline: surface, minimal curve, classification");
  common(curve, true);
  curve->add_option("--samples", cfg.samples, "fitting samples (raised to what the degree bound needs)");
  curve->add_option("--tol", cfg.tol, "fit acceptance tolerance");
  curve->add_flag("--golden", cfg.golden, "compare with the matching golden case");
  curve->add_option("--golden-file", cfg.golden_file, "golden fixtures file (default: built in)");
  curve->add_option("--radicands", cfg.radicands, "comma list of D for p+q*sqrt(D) reconstruction");
  auto* verify = app.add_subcommand("verify", "run the golden cases");
  common(verify, false);
  verify->add_option("--golden", cfg.golden_case, "case name or 'all'");
  verify->add_option("--golden-file", cfg.golden_file, "golden fixtures file (default: built in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*params) return cmd_params(cfg);
    if (*sample) return cmd_sample(cfg);
    if (*poly) return cmd_poly(cfg);
    if (*disc) return cmd_disc(cfg);
    if (*curve) return cmd_curve(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
