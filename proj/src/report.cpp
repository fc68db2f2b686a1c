#include "torus/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "torus/families.hpp"
#include "torus/quadratic.hpp"

namespace torus {

namespace {

constexpr std::array<CycleType, 4> kTypes = {CycleType::aa, CycleType::bb, CycleType::aba, CycleType::bab};

// Non-finite numbers become null.
ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json edge_point(const EdgePoint& e) {
  ordered_json j;
  j["edge"] = to_string(e.edge);
  j["t"] = number(e.t);
  return j;
}

ordered_json section(const BivariatePolynomial& h, CycleType type, int degree, const AnalyzeOptions& o) {
  ordered_json s;
  s["regime"] = to_string(o.enumeration.mode);
  s["theoretical_bound"] = theoretical_bound(type, degree);
  EnumerationResult r;
  try {
    r = enumerate(h, type, o.enumeration);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundViolation) throw;
    s["status"] = to_string(e.kind());
    s["message"] = e.what();
    s["candidate_count"] = 0;
    s["passed_count"] = 0;
    s["verified_count"] = 0;
    s["flags"] = {{"degenerate", true}, {"points_at_infinity", nullptr}, {"min_level_gap", nullptr}};
    s["candidates"] = ordered_json::array();
    return s;
  }
  s["status"] = "ok";
  s["eliminant_degree"] = r.eliminant.degree();
  ordered_json candidates = ordered_json::array();
  int passed = 0, verified = 0;
  for (CycleCandidate cand : r.candidates) {
    std::optional<VerificationRecord> rec;
    if (cand.filters.passed()) {
      ++passed;
      if (o.trace) {
        rec = verify_cycle(h, cand, o.verify);
        cand.filters.verified = rec->verified;
        if (rec->verified) ++verified;
      }
    }
    ordered_json c = to_json(cand, o.enumeration.mode);
    c["verification"] = rec ? to_json(*rec) : ordered_json(nullptr);
    candidates.push_back(c);
  }
  s["candidate_count"] = r.candidates.size();
  s["passed_count"] = passed;
  s["verified_count"] = o.trace ? ordered_json(verified) : ordered_json(nullptr);
  s["flags"] = {{"degenerate", false},
                {"points_at_infinity", r.points_at_infinity},
                {"min_level_gap", number(r.min_level_gap)}};
  s["candidates"] = candidates;
  return s;
}

ordered_json tolerances(const AnalyzeOptions& o) {
  const auto& e = o.enumeration;
  const auto& t = o.verify.trace;
  return {{"root_tolerance", e.root_tolerance},     {"boundary_epsilon", e.boundary_epsilon},
          {"tangency_tol", e.tangency_tol},         {"pairing_tol", e.pairing_tol},
          {"closing_tol", e.closing_tol},           {"level_gap_tol", e.level_gap_tol},
          {"closure_tol", t.closure_tol},           {"level_drift_tol", t.level_drift_tol},
          {"grad_floor", t.grad_floor},             {"max_crossings", t.max_crossings},
          {"seam_tol", o.verify.seam_tol}};
}

ordered_json bb_conditions_json(const QuadraticBbVerdict& v) {
  ordered_json j;
  j["conditions"] = {{"a", v.cond_a}, {"b", v.cond_b}, {"c", v.cond_c}, {"d", v.cond_d}};
  j["exists"] = v.exists;
  j["delta"] = to_string(v.delta);
  j["x0"] = v.x0 ? ordered_json(to_string(*v.x0)) : ordered_json(nullptr);
  j["level"] = v.level ? ordered_json(to_string(*v.level)) : ordered_json(nullptr);
  return j;
}

ordered_json aba_json(const Rational& a, const Rational& b, const Rational& c) {
  ordered_json j;
  try {
    const QuadraticAbaAnalysis q = quadratic_aba_analyze(a, b, c);
    const QuadraticAbaRegion region = quadratic_aba_region(a, b, c);
    j["applicable"] = true;
    j["radicand"] = to_string(q.radicand);
    j["complex"] = q.complex;
    j["degenerate"] = q.degenerate;
    j["Q"] = q.complex ? ordered_json(nullptr) : number(q.Q);
    j["P_c"] = to_string(q.Pc);
    j["delta_P"] = to_string(q.delta_P);
    ordered_json rho = ordered_json::array();
    for (const auto& r : q.rho) rho.push_back(number(to_double(r.value)));
    j["rho"] = rho;
    ordered_json sols = ordered_json::array();
    for (const auto& s : q.solutions) sols.push_back({{"x", number(s.x)}, {"y", number(s.y)}, {"interior", s.interior}});
    j["solutions"] = sols;
    j["exists"] = q.exists;
    j["clause"] = to_string(region.clause);
    j["clause_c_range"] = region.c_range;
    j["clause_exists"] = region.exists;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateDenominator) throw;
    j["applicable"] = false;
    j["reason"] = e.what();
  }
  return j;
}

// Coefficients (a, b, c) when h is a pure quadratic form.
std::optional<std::array<Rational, 3>> quadratic_coefficients(const BivariatePolynomial& h) {
  for (const Term& t : h.terms()) {
    if (t.k != 2) return std::nullopt;
  }
  return std::array<Rational, 3>{h.term(2, 0), h.term(2, 1), h.term(2, 2)};
}

}  // namespace

ordered_json to_json(const VerificationRecord& rec) {
  ordered_json j;
  j["verified"] = rec.verified;
  j["failure"] = rec.failure ? ordered_json(to_string(*rec.failure)) : ordered_json(nullptr);
  j["message"] = rec.message;
  j["word"] = rec.word;
  j["closed"] = rec.closed;
  j["all_sewing"] = rec.all_sewing;
  j["closure_error"] = number(rec.closure_error);
  j["max_drift"] = number(rec.max_drift);
  j["min_grad"] = number(rec.min_grad);
  j["max_level_jump"] = number(rec.max_level_jump);
  j["crossings"] = rec.curve ? rec.curve->crossings.size() : 0;
  j["stray_level_incidences"] = rec.stray_level_incidences;
  ordered_json stray = ordered_json::array();
  for (const auto& p : rec.stray_points) stray.push_back(edge_point(p));
  j["stray_points"] = stray;
  return j;
}

ordered_json to_json(const CycleCandidate& cand, ArithmeticMode mode) {
  ordered_json j;
  j["type"] = to_string(cand.type);
  j["regime"] = to_string(mode);
  const bool has_x = cand.type != CycleType::aa, has_y = cand.type != CycleType::bb;
  if (has_x) {
    j["x"] = number(cand.x);
    if (cand.x_root && cand.x_root->exact) j["x_exact"] = to_string(cand.x_root->lo);
  }
  if (has_y) {
    j["y"] = number(cand.y);
    if (cand.y_root && cand.y_root->exact) j["y_exact"] = to_string(cand.y_root->lo);
  }
  ordered_json seams = ordered_json::array();
  for (const auto& s : cand.seam_points()) seams.push_back(edge_point(s));
  j["seams"] = seams;
  ordered_json levels = ordered_json::array();
  for (double l : cand.levels) levels.push_back(number(l));
  j["levels"] = levels;
  j["multiplicity"] = cand.multiplicity;
  j["near_boundary"] = cand.near_boundary;
  j["residual"] = number(cand.residual);
  j["jacobian_condition"] = number(cand.jacobian_condition);
  const CandidateFilters& f = cand.filters;
  j["filters"] = {{"interior", f.interior},
                  {"closing_residual", f.closing_residual},
                  {"transversal", f.transversal},
                  {"nondegenerate", f.nondegenerate},
                  {"distinct_level", f.distinct_level},
                  {"sewing", f.sewing},
                  {"passed", f.passed()},
                  {"verified", f.verified ? ordered_json(*f.verified) : ordered_json(nullptr)}};
  return j;
}

ordered_json analyze(const PolynomialInput& input, const AnalyzeOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const BivariatePolynomial& h = input.h;
  const int n = input.degree;
  ordered_json report;
  report["input_hash"] = input.input_hash;
  report["label"] = input.label;
  report["mode"] = to_string(options.enumeration.mode);
  report["degree"] = n;
  report["polynomial"] = polynomial_to_json(h, input.label);
  if (input.family) report["family"] = {{"name", *input.family}, {"n", *input.family_n}};
  report["tolerances"] = tolerances(options);
  report["trace"] = options.trace;

  ordered_json sections;
  for (CycleType t : kTypes) sections[to_string(t)] = section(h, t, n, options);
  report["sections"] = sections;

  if (n == 2) {
    ordered_json q;
    if (const auto abc = quadratic_coefficients(h)) {
      const auto& [a, b, c] = *abc;
      q["applicable"] = true;
      q["a"] = to_string(a);
      q["b"] = to_string(b);
      q["c"] = to_string(c);
      q["bb"] = bb_conditions_json(quadratic_bb_conditions(a, b, c));
      q["aba"] = aba_json(a, b, c);
    } else {
      q["applicable"] = false;
      q["reason"] = "H has terms of degree below 2; the quadratic criteria concern a x^2 + b x y + c y^2";
    }
    report["quadratic"] = q;
  }
  if (options.timing) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report["timing"] = {{"total_seconds", seconds}};
  }
  return report;
}

ordered_json quadratic_verdict(const Rational& a, const Rational& b, const Rational& c, const AnalyzeOptions& options) {
  const QuadraticBbVerdict bb = quadratic_bb_conditions(a, b, c);
  ordered_json j;
  j["a"] = to_string(a);
  j["b"] = to_string(b);
  j["c"] = to_string(c);
  j["bb"] = bb_conditions_json(bb);
  j["aba"] = aba_json(a, b, c);

  // Cross-check: the bb verdict against the traced geometry, the closed-form
  // aba pairs against the general enumerator.
  const BivariatePolynomial h = quadratic_form(a, b, c);
  ordered_json cross;
  const GeometricBbVerdict geo = quadratic_bb_geometric(a, b, c, options.verify);
  cross["bb_geometric_exists"] = geo.exists;
  cross["bb_geometric_reason"] = geo.reason;
  cross["bb_consistent"] = geo.exists == bb.exists;
  try {
    const EnumerationResult aba = enumerate_aba(h, options.enumeration);
    int interior = 0;
    for (const auto& cand : aba.candidates) interior += cand.filters.interior ? 1 : 0;
    cross["aba_enumerated_interior"] = interior;
    if (j["aba"]["applicable"].get<bool>()) {
      const QuadraticAbaAnalysis q = quadratic_aba_analyze(a, b, c);
      bool consistent = true;
      int closed_form_interior = 0;
      for (const auto& s : q.solutions) {
        if (!s.interior) continue;
        ++closed_form_interior;
        bool found = false;
        for (const auto& cand : aba.candidates) {
          found = found || (std::abs(cand.x - s.x) <= 1e-10 && std::abs(cand.y - s.y) <= 1e-10);
        }
        consistent = consistent && found;
      }
      cross["aba_closed_form_interior"] = closed_form_interior;
      cross["aba_consistent"] = consistent && closed_form_interior == interior;
    } else {
      cross["aba_consistent"] = nullptr;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundViolation) throw;
    cross["aba_enumerated_interior"] = nullptr;
    cross["aba_error"] = e.what();
    cross["aba_consistent"] = nullptr;
  }
  j["cross_check"] = cross;
  return j;
}

std::string serialize_report(const ordered_json& report) {
  if (report.contains("sections")) {
    for (const auto& [name, s] : report["sections"].items()) {
      const long count = s["candidate_count"].get<long>();
      const long bound = s["theoretical_bound"].get<long>();
      if (count > bound) {
        throw Error(ErrorKind::BoundViolation, name + ": " + std::to_string(count) + " candidates exceed the bound " +
                                                   std::to_string(bound));
      }
    }
  }
  return report.dump(2) + "\n";
}

std::string curve_csv(const TracedCurve& curve) {
  std::string out = "segment_index,x,y\n";
  char buf[96];
  for (std::size_t i = 0; i < curve.segments.size(); ++i) {
    for (const auto& p : curve.segments[i]) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, p.x, p.y);
      out += buf;
    }
  }
  return out;
}

std::string crossings_csv(const TracedCurve& curve) {
  std::string out = "index,edge,t,entry_edge,class,nu_plus,nu_minus,level_jump\n";
  char buf[256];
  for (std::size_t i = 0; i < curve.crossings.size(); ++i) {
    const Crossing& c = curve.crossings[i];
    std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%s,%s,%.17g,%.17g,%.17g\n", i, to_string(c.exit.edge), c.exit.t,
                  to_string(c.entry.edge), to_string(c.cls), c.nu_plus, c.nu_minus, c.level_jump);
    out += buf;
  }
  return out;
}

std::string curve_svg(const TracedCurve& curve, const std::string& title) {
  constexpr double kSize = 512.0;
  auto px = [](double x) { return x * kSize; };
  auto py = [](double y) { return (1.0 - y) * kSize; };
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  if (!title.empty()) os << "  <title>" << title << "</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& seg : curve.segments) {
    os << "  <polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
    // Thin long polylines to about one point per pixel step.
    double lx = -1, ly = -1;
    for (std::size_t i = 0; i < seg.size(); ++i) {
      const double x = px(seg[i].x), y = py(seg[i].y);
      if (i != 0 && i + 1 != seg.size() && std::hypot(x - lx, y - ly) < 0.5) continue;
      os << x << "," << y << " ";
      lx = x;
      ly = y;
    }
    os << "\"/>\n";
  }
  for (const auto& c : curve.crossings) {
    for (const EdgePoint& e : {c.exit, c.entry}) {
      const Vec2 p = e.point();
      const char* color = c.cls == FilippovClass::sewing ? "#2e8b57" : "#c0392b";
      os << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"5\" fill=\"" << color << "\"/>\n";
    }
  }
  const Vec2 s = curve.start.point();
  os << "  <rect x=\"" << px(s.x) - 4 << "\" y=\"" << py(s.y) - 4
     << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace torus
