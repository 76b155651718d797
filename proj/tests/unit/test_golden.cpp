#include "arctic/golden.hpp"
#include "helpers.hpp"

using namespace arctic;

TEST_CASE("embedded fixtures") {
  const auto& file = builtin_golden_cases();
  const auto& a3 = find_golden_case(file, "alpha3");
  CHECK(a3.n == 3);
  CHECK(a3.d == 1);
  CHECK(a3.expected_curve_degree == 6);
  // both halves of each symmetric pair are present
  CHECK(a3.coefficients.size() == 28);
  XYPoly c = a3.expected_curve();
  CHECK(c.coefficient(5, 1) == 1620);
  CHECK(c.coefficient(1, 5) == 1620);
  CHECK(c.coefficient(0, 0) == -648);

  const auto& a52 = find_golden_case(file, "alpha5_2");
  WorkingPrecision guard(256);
  XYPoly e = a52.expected_curve();
  CHECK(e.coefficient(8, 0) == 128);
  CHECK_CLOSE(e.coefficient(7, 1), -512 * (1 - sqrt(Real(5))), 1e-60);
  CHECK_CLOSE(e.coefficient(0, 0), 85 * sqrt(Real(5)) + 87, 1e-60);
  CHECK(a52.reference_value().p == 128);

  CHECK(match_golden_case(file, 3, 2, "1/2 pi") != nullptr);
  CHECK(match_golden_case(file, 3, 2, "1.5707963267948966") == nullptr);
  CHECK_THROWS_KIND(find_golden_case(file, "nope"), ErrorKind::BadInput);
}

TEST_CASE("exact values") {
  ExactValue v{3, -1, 5, 2};
  CHECK_CLOSE(v.value(), (3 - sqrt(Real(5))) / 2, 1e-70);
  CHECK_FALSE(v.to_string().empty());
}

TEST_CASE("malformed fixture files are input errors") {
  CHECK_THROWS_KIND(parse_golden_cases("{"), ErrorKind::BadInput);
  CHECK_THROWS_KIND(parse_golden_cases(R"({"format_version": 99, "cases": []})"), ErrorKind::BadInput);
  CHECK_THROWS_KIND(load_golden_cases("/nonexistent/golden.json"), ErrorKind::BadInput);
  auto f = parse_golden_cases(R"({"format_version": 1, "cases": [
    {"name": "tiny", "n": 2, "d": 1, "lambda": "1/2 pi", "expected_deg_p": 2,
     "expected_curve_degree": 2, "tolerance": 1e-20, "symmetric": true,
     "coefficients": [{"i": 2, "j": 0, "p": 4}, {"i": 1, "j": 1, "p": 0}]}]})");
  REQUIRE(f.cases.size() == 1);
  CHECK(f.cases[0].coefficients.size() == 3);
}
