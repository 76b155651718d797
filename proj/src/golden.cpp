#include "arctic/golden.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "arctic/errors.hpp"
#include "arctic/model_params.hpp"

namespace arctic {

extern const char* const kEmbeddedGoldenJson;

namespace {

using nlohmann::json;

ExactValue parse_value(const json& j, std::int64_t radicand) {
  ExactValue v;
  std::int64_t scale = j.value("scale", std::int64_t{1});
  v.p = scale * j.value("p", std::int64_t{0});
  v.q = scale * j.value("q", std::int64_t{0});
  v.radicand = v.q == 0 ? 1 : radicand;
  v.denominator = j.value("s", std::int64_t{1});
  if (v.denominator <= 0) throw Error(ErrorKind::BadInput, "golden value with non-positive denominator");
  return v;
}

std::vector<ExactCoefficient> parse_coefficients(const json& list, std::int64_t radicand, bool symmetric) {
  std::vector<ExactCoefficient> out;
  for (const json& e : list) {
    ExactCoefficient c{e.at("i").get<int>(), e.at("j").get<int>(), parse_value(e, radicand)};
    if (c.i < 0 || c.j < 0) throw Error(ErrorKind::BadInput, "golden monomial with negative exponent");
    out.push_back(c);
    if (symmetric && c.i != c.j) out.push_back({c.j, c.i, c.value});
  }
  return out;
}

GoldenCase parse_case(const json& j) {
  GoldenCase c;
  c.name = j.at("name").get<std::string>();
  c.n = j.at("n").get<int>();
  c.d = j.at("d").get<int>();
  c.lambda = j.at("lambda").get<std::string>();
  if (j.contains("generic_lambda")) c.generic_lambda = j.at("generic_lambda").get<std::string>();
  c.expected_deg_p = j.at("expected_deg_p").get<int>();
  c.expected_curve_degree = j.at("expected_curve_degree").get<int>();
  c.tolerance = j.value("tolerance", 1e-15);
  const auto radicand = j.value("radicand", std::int64_t{1});
  const bool symmetric = j.value("symmetric", false);
  c.coefficients = parse_coefficients(j.value("coefficients", json::array()), radicand, symmetric);
  for (const json& k : j.value("constants", json::array()))
    c.constants.push_back({k.at("name").get<std::string>(), k.at("expression").get<std::string>()});
  for (const json& s : j.value("spurious", json::array())) {
    SpuriousComponent comp;
    comp.kind = s.at("kind").get<std::string>();
    comp.x = parse_value(s.at("x"), radicand);
    comp.y = parse_value(s.at("y"), radicand);
    comp.double_root = s.value("double_root", std::string{});
    comp.factor = parse_coefficients(s.value("factor", json::array()), radicand, symmetric);
    for (const json& t : s.value("sum_of_squares", json::array()))
      comp.sum_of_squares.push_back({parse_value(t.at("weight"), radicand), parse_coefficients(t.at("form"), radicand, false)});
    c.spurious.push_back(std::move(comp));
  }
  return c;
}

}  // namespace

Real ExactValue::value() const {
  Real v = Real(p);
  if (q != 0) v += Real(q) * sqrt(Real(radicand));
  return v / Real(denominator);
}

std::string ExactValue::to_string() const {
  std::ostringstream os;
  bool open = denominator != 1 && (q != 0 && p != 0);
  if (open) os << "(";
  if (q == 0 || p != 0) os << p;
  if (q != 0) {
    if (p != 0) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    std::int64_t aq = q < 0 ? -q : q;
    if (aq != 1) os << aq << "*";
    os << "sqrt(" << radicand << ")";
  }
  if (open) os << ")";
  if (denominator != 1) os << "/" << denominator;
  return os.str();
}

ExactValue GoldenCase::reference_value() const {
  for (const auto& c : coefficients)
    if (c.i == expected_curve_degree && c.j == 0) return c.value;
  throw Error(ErrorKind::BadInput, "golden case '" + name + "' has no reference coefficient");
}

XYPoly GoldenCase::expected_curve() const { return exact_polynomial(coefficients); }

XYPoly exact_polynomial(const std::vector<ExactCoefficient>& coeffs) {
  int deg = 0;
  for (const auto& c : coeffs) deg = std::max(deg, c.i + c.j);
  XYPoly p(deg);
  for (const auto& c : coeffs) p.at(c.i, c.j) = c.value.value();
  return p;
}

GoldenFile parse_golden_cases(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("golden file is not valid JSON: ") + e.what());
  }
  GoldenFile f;
  try {
    f.format_version = j.at("format_version").get<int>();
    if (f.format_version != 1)
      throw Error(ErrorKind::BadInput, "unsupported golden file version " + std::to_string(f.format_version));
    for (const json& c : j.at("cases")) f.cases.push_back(parse_case(c));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed golden file: ") + e.what());
  }
  return f;
}

GoldenFile load_golden_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_golden_cases(ss.str());
}

const GoldenFile& builtin_golden_cases() {
  static const GoldenFile file = parse_golden_cases(kEmbeddedGoldenJson);
  return file;
}

const GoldenCase& find_golden_case(const GoldenFile& file, const std::string& name) {
  for (const auto& c : file.cases)
    if (c.name == name) return c;
  throw Error(ErrorKind::BadInput, "unknown golden case '" + name + "'");
}

const GoldenCase* match_golden_case(const GoldenFile& file, int n, int d, const std::string& lambda) {
  LambdaInput want = parse_lambda(lambda);
  const auto* want_exact = std::get_if<RationalAngle>(&want);
  if (!want_exact) return nullptr;
  for (const auto& c : file.cases) {
    if (c.n != n || c.d != d) continue;
    LambdaInput have = parse_lambda(c.lambda);
    if (const auto* e = std::get_if<RationalAngle>(&have); e && *e == *want_exact) return &c;
  }
  return nullptr;
}

}  // namespace arctic
