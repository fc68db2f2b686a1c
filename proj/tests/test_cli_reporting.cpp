#include <algorithm>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "torus/io.hpp"
#include "torus/quadratic.hpp"
#include "torus/report.hpp"
#include "torus/stress.hpp"

using namespace torus;

namespace {

std::string fixture(const std::string& name) { return std::string(TORUS_FIXTURES) + "/" + name; }

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::ParseError;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

AnalyzeOptions deterministic() {
  AnalyzeOptions o;
  o.enumeration.mode = ArithmeticMode::exact;
  o.timing = false;
  return o;
}

}  // namespace

TEST_CASE("parse: monomial convention, exact decimals and float mode") {
  const auto in = parse_polynomial(R"({"degree": 2, "terms": [
      {"k": 1, "j": 1, "value": "1/3"},
      {"k": 2, "j": 0, "value": 0.1},
      {"k": 2, "j": 2, "value": -4}]})");
  CHECK(in.degree == 2);
  // (k, j) = (1, 1) is y, (2, 0) is x^2, (2, 2) is y^2.
  CHECK(in.h.coefficient(0, 1) == fraction(1, 3));
  CHECK(in.h.coefficient(2, 0) == fraction(1, 10));
  CHECK(in.h.coefficient(0, 2) == -4);
  CHECK(in.h.coefficient(1, 1) == 0);

  const auto f = parse_polynomial(R"({"degree": 2, "terms": [{"k": 2, "j": 0, "value": "0.1"}]})",
                                  ArithmeticMode::floating);
  CHECK(f.h.coefficient(2, 0) != fraction(1, 10));
  CHECK(to_double(f.h.coefficient(2, 0)) == 0.1);
}

TEST_CASE("parse errors carry line and column or a field path") {
  const std::string bad = "{\n  \"degree\": 2,\n  \"terms\": [\n    {\"k\": 2 \"j\": 0}\n  ]\n}";
  CHECK(parse_error_kind(bad) == ErrorKind::ParseError);
  CHECK(parse_error_message(bad).find("line 4, column") != std::string::npos);

  const std::string bad_value = R"({"degree": 1, "terms": [{"k": 1, "j": 0, "value": "1/0"}]})";
  CHECK(parse_error_kind(bad_value) == ErrorKind::ParseError);
  CHECK(parse_error_message(bad_value).find("$.terms[0].value") != std::string::npos);
  CHECK(parse_error_kind(R"({"terms": []})") == ErrorKind::ParseError);
  CHECK(parse_error_kind(R"([1, 2])") == ErrorKind::ParseError);
  CHECK(parse_error_kind(R"({"family": {"name": "spirals", "n": 3}})") == ErrorKind::ParseError);
  CHECK_THROWS_AS(read_polynomial_file(fixture("does_not_exist.json")), Error);
}

TEST_CASE("coefficient-table invariants") {
  const auto kind = [](const char* t) { return parse_error_kind(t); };
  CHECK(kind(R"({"degree": 2, "terms": [{"k": 2, "j": 3, "value": "1"}]})") == ErrorKind::InvariantViolation);
  CHECK(kind(R"({"degree": 2, "terms": [{"k": 3, "j": 0, "value": "1"}]})") == ErrorKind::InvariantViolation);
  CHECK(kind(R"({"degree": 2, "terms": [{"k": 2, "j": 0, "value": "1"}, {"k": 2, "j": 0, "value": "2"}]})") ==
        ErrorKind::InvariantViolation);
  // Declared degree 3 but no cubic term.
  CHECK(kind(R"({"degree": 3, "terms": [{"k": 2, "j": 0, "value": "1"}]})") == ErrorKind::InvariantViolation);
  CHECK(kind(R"({"family": {"name": "vertical_lines", "n": 1}})") == ErrorKind::InvariantViolation);
  CHECK(exit_code(ErrorKind::ParseError) == 1);
  CHECK(exit_code(ErrorKind::InvariantViolation) == 1);
  CHECK(exit_code(ErrorKind::CornerPoint) == 2);
  CHECK(exit_code(ErrorKind::BoundViolation) == 3);
}

TEST_CASE("echo round-trips to the identical coefficient table") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto h = test_support::random_h(rng, 1 + i % 6, 50, 17);
    const auto echo = polynomial_to_json(h, "r");
    const auto back = parse_polynomial(echo.dump());
    CHECK(back.h == h);
    CHECK(back.label == "r");
    CHECK(polynomial_to_json(back.h, "r").dump() == echo.dump());
  }
  const auto e1 = read_polynomial_file(fixture("example1_degree3.json"));
  CHECK(e1.h == six_aba_cubic());
  CHECK(parse_polynomial(polynomial_to_json(e1.h).dump()).h == e1.h);
}

TEST_CASE("family input matches the generator") {
  const auto in = read_polynomial_file(fixture("family_n6.json"));
  REQUIRE(in.family.has_value());
  CHECK(*in.family_n == 6);
  CHECK(in.h == vertical_lines_family(6));
  CHECK(in.degree == 6);
}

TEST_CASE("analyze: circle has no cycles of any type") {
  const auto report = analyze(read_polynomial_file(fixture("circle.json")), deterministic());
  for (const char* t : {"aa", "bb", "aba", "bab"}) {
    CHECK(report["sections"][t]["candidate_count"] == 0);
    CHECK(report["sections"][t]["verified_count"] == 0);
  }
  // x = y is common to both bab closing curves: flagged, not enumerated.
  CHECK(report["sections"]["bab"]["status"] == "CommonComponent");
  CHECK(report["sections"]["bab"]["flags"]["degenerate"] == true);
  REQUIRE(report.contains("quadratic"));
  CHECK(report["quadratic"]["bb"]["exists"] == false);
  CHECK_FALSE(report.contains("timing"));
}

TEST_CASE("analyze: vertical-lines family n = 6") {
  const auto report = analyze(read_polynomial_file(fixture("family_n6.json")), deterministic());
  const auto& bb = report["sections"]["bb"];
  CHECK(bb["theoretical_bound"] == 5);
  REQUIRE(bb["candidate_count"] == 5);
  for (int k = 1; k <= 5; ++k) {
    const auto& c = bb["candidates"][k - 1];
    CHECK(c["x"].get<double>() == doctest::Approx(k / 6.0).epsilon(1e-14));
    CHECK(c["x_exact"] == to_string(fraction(k, 6)));
    CHECK(c["regime"] == "exact");
    CHECK(c["filters"]["transversal"] == true);
    CHECK(c["filters"]["nondegenerate"] == true);
  }
  // The x = 1/6 seam is not a sewing cycle; the tracer says why.
  CHECK(bb["candidates"][0]["verification"]["verified"] == false);
  CHECK(bb["verified_count"] == 4);
  CHECK_FALSE(report.contains("quadratic"));
}

TEST_CASE("analyze: cubic example report") {
  const auto report = analyze(read_polynomial_file(fixture("example1_degree3.json")), deterministic());
  const auto& aba = report["sections"]["aba"];
  CHECK(aba["theoretical_bound"] == 6);
  CHECK(aba["candidate_count"] == 6);
  CHECK(aba["passed_count"] == 6);
  CHECK(report["mode"] == "exact");
  CHECK(report["polynomial"]["terms"].size() == 7);
  CHECK(report["tolerances"]["closure_tol"] == 1e-6);
}

TEST_CASE("reports are deterministic and respect --no-trace") {
  const auto in = read_polynomial_file(fixture("example1_degree3.json"));
  const std::string a = serialize_report(analyze(in, deterministic()));
  const std::string b = serialize_report(analyze(read_polynomial_file(fixture("example1_degree3.json")), deterministic()));
  CHECK(a == b);
  AnalyzeOptions o = deterministic();
  o.trace = false;
  const auto r = analyze(in, o);
  CHECK(r["sections"]["aba"]["verified_count"].is_null());
  CHECK(r["sections"]["aba"]["candidates"][0]["verification"].is_null());
  CHECK(analyze(in)["timing"]["total_seconds"].get<double>() >= 0.0);
}

TEST_CASE("serialization rejects counts above the bound") {
  auto report = analyze(read_polynomial_file(fixture("circle.json")), deterministic());
  report["sections"]["bb"]["candidate_count"] = 2;
  try {
    serialize_report(report);
    FAIL("no BoundViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundViolation);
  }
}

TEST_CASE("quadratic verdicts") {
  const auto v = quadratic_verdict(1, 2, -1);
  CHECK(v["bb"]["conditions"]["a"] == true);
  CHECK(v["bb"]["exists"] == true);
  CHECK(v["bb"]["x0"] == "1/2");
  CHECK(v["cross_check"]["bb_consistent"] == true);
  CHECK(v["cross_check"]["aba_consistent"] == true);

  const auto w = quadratic_verdict(1, 0, 1);
  for (const char* c : {"a", "b"}) CHECK(w["bb"]["conditions"][c] == false);
  CHECK(w["bb"]["exists"] == false);
  CHECK(w["aba"]["applicable"] == false);
  CHECK(w["cross_check"]["aba_enumerated_interior"] == 0);
  CHECK_THROWS_AS(quadratic_verdict(0, 0, 0), Error);
}

TEST_CASE("quadratic verdict with two closed-form aba pairs") {
  // Search small rationals for a triple with two interior pairs and check the
  // echo against enumerate_aba.
  std::mt19937_64 rng(77);
  int seen = 0;
  for (int i = 0; i < 40000 && seen < 5; ++i) {
    const Rational a = test_support::random_rational(rng, 9, 4), b = test_support::random_rational(rng, 9, 4),
                   c = test_support::random_rational(rng, 9, 4);
    if (b == 0 || a == c) continue;
    const auto q = quadratic_aba_analyze(a, b, c);
    if (!q.exists || q.solutions.size() != 2) continue;
    const auto v = quadratic_verdict(a, b, c);
    CHECK(v["aba"]["exists"] == true);
    CHECK(v["aba"]["solutions"].size() == 2);
    CHECK(v["cross_check"]["aba_consistent"] == true);
    CHECK(v["cross_check"]["aba_enumerated_interior"] == 2);
    ++seen;
  }
  CHECK(seen == 5);
}

TEST_CASE("curve exports") {
  const auto h = vertical_lines_family(3);
  const TracedCurve c = trace_level_curve(h, {Edge::bottom, 2.0 / 3.0});
  const std::string csv = curve_csv(c);
  CHECK(csv.rfind("segment_index,x,y\n", 0) == 0);
  std::size_t rows = 0;
  for (const auto& s : c.segments) rows += s.size();
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == rows + 1);
  const std::string log = crossings_csv(c);
  CHECK(std::count(log.begin(), log.end(), '\n') == static_cast<long>(c.crossings.size()) + 1);
  CHECK(log.find("sewing") != std::string::npos);
  const std::string svg = curve_svg(c, "n3");
  CHECK(svg.find("width=\"512\" height=\"512\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  // The vertical line x = 2/3 maps to pixel column 341.333.
  CHECK(svg.find("341.333,512.000") != std::string::npos);
}

TEST_CASE("stress: bounds, exclusions and worker-count independence") {
  StressOptions o;
  o.degree = 3;
  o.trials = 120;
  o.seed = 5;
  o.workers = 1;
  const auto one = run_stress(o);
  o.workers = 7;
  const auto many = run_stress(o);
  CHECK(to_json(one).dump() == to_json(many).dump());
  for (const auto& t : one.types) {
    CHECK(t.max_candidates <= t.bound);
    int total = 0;
    for (int v : t.histogram) total += v;
    CHECK(total == t.admissible);
  }
  REQUIRE(one.injected.has_value());
  CHECK((*one.injected)[2] == 6);
  CHECK(one.types[2].max_passed == 6);

  o.degree = 1;
  o.workers = 0;
  const auto linear = run_stress(o);
  CHECK(linear.types[1].bound == 0);
  CHECK(linear.types[1].max_candidates == 0);
  CHECK_FALSE(linear.injected.has_value());

  o.degree = 9;
  CHECK_THROWS_AS(run_stress(o), Error);
  o.degree = 2;
  o.trials = 0;
  CHECK_THROWS_AS(run_stress(o), Error);
  CHECK(stress_polynomial(5, 3, 4, 9, 4) == stress_polynomial(5, 3, 4, 9, 4));
  CHECK(stress_polynomial(5, 3, 4, 9, 4).constant_term() == 0);
  CHECK(stress_polynomial(5, 3, 4, 9, 4).degree() == 4);
}
