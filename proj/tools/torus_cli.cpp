// Command-line front end: analyze, quadratic, trace and stress subcommands.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "torus/error.hpp"
#include "torus/io.hpp"
#include "torus/report.hpp"
#include "torus/stress.hpp"
#include "torus/verification.hpp"

namespace {

using namespace torus;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvariantViolation, "cannot write " + path);
  out << text;
}

ArithmeticMode parse_mode(const std::string& s) {
  return s == "exact" ? ArithmeticMode::exact : ArithmeticMode::floating;
}

struct CommonFlags {
  std::string mode = "exact";
  double tol_closure = TraceOptions{}.closure_tol;
  double tol_grad_floor = TraceOptions{}.grad_floor;
  int max_crossings = TraceOptions{}.max_crossings;

  void add_to(CLI::App* app) {
    app->add_option("--mode", mode, "Arithmetic for parsing and enumeration")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    app->add_option("--tol-closure", tol_closure, "Closure tolerance (torus distance)")->capture_default_str();
    app->add_option("--tol-grad-floor", tol_grad_floor, "Smallest admissible |grad H| along a trace")
        ->capture_default_str();
    app->add_option("--max-crossings", max_crossings, "Crossings allowed before a trace gives up")
        ->capture_default_str();
  }

  AnalyzeOptions analyze_options() const {
    AnalyzeOptions o;
    o.enumeration.mode = parse_mode(mode);
    o.verify.trace.closure_tol = tol_closure;
    o.verify.trace.grad_floor = tol_grad_floor;
    o.verify.trace.max_crossings = max_crossings;
    return o;
  }
};

Edge parse_edge(const std::string& s) {
  static const std::map<std::string, Edge> edges{
      {"bottom", Edge::bottom}, {"top", Edge::top}, {"left", Edge::left}, {"right", Edge::right}};
  return edges.at(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing limit cycles of polynomial first integrals on the glued unit square"};
  app.require_subcommand(1);

  CommonFlags common;
  std::string input, output = "-";

  auto* analyze = app.add_subcommand("analyze", "Enumerate and verify cycles of every type");
  analyze->add_option("input", input, "Polynomial JSON file")->required();
  analyze->add_option("-o,--output", output, "Report path (default stdout)");
  bool no_trace = false, no_timing = false;
  analyze->add_flag("--no-trace", no_trace, "Skip verification by tracing");
  analyze->add_flag("--no-timing", no_timing, "Omit the timing block");
  common.add_to(analyze);

  auto* quadratic = app.add_subcommand("quadratic", "Criteria for H = a x^2 + b x y + c y^2");
  std::string qa, qb, qc;
  quadratic->add_option("a", qa, "Coefficient of x^2 (integer, decimal or p/q)")->required();
  quadratic->add_option("b", qb, "Coefficient of x y")->required();
  quadratic->add_option("c", qc, "Coefficient of y^2")->required();
  quadratic->add_option("-o,--output", output, "Verdict path (default stdout)");
  common.add_to(quadratic);

  auto* trace = app.add_subcommand("trace", "Trace one level curve from a seam point");
  std::string edge, at, svg, crossings;
  int direction = 1;
  trace->add_option("input", input, "Polynomial JSON file")->required();
  trace->add_option("--edge", edge, "Start edge")
      ->required()
      ->check(CLI::IsMember({"bottom", "top", "left", "right"}));
  trace->add_option("--at", at, "Start coordinate along the edge (decimal or p/q)")->required();
  trace->add_option("--direction", direction, "+1 follows the Hamiltonian field, -1 reverses it")
      ->check(CLI::IsMember({-1, 1}));
  trace->add_option("-o,--output", output, "Polyline CSV path (default stdout)");
  trace->add_option("--crossings", crossings, "Crossing log CSV path");
  trace->add_option("--svg", svg, "SVG plot path");
  common.add_to(trace);

  auto* stress = app.add_subcommand("stress", "Bound sweep over seeded random first integrals");
  StressOptions so;
  bool no_inject = false;
  stress->add_option("--degree", so.degree, "Degree n in [1, 8]")->required();
  stress->add_option("--trials", so.trials, "Number of random inputs")->capture_default_str();
  stress->add_option("--seed", so.seed, "Base seed")->capture_default_str();
  stress->add_option("--workers", so.workers, "Worker threads (0 = all cores)")->capture_default_str();
  stress->add_flag("--no-inject", no_inject, "Do not add the six-aba cubic at n = 3");
  stress->add_option("-o,--output", output, "Summary path (default stdout)");
  common.add_to(stress);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const ArithmeticMode mode = parse_mode(common.mode);
    if (*analyze) {
      AnalyzeOptions o = common.analyze_options();
      o.trace = !no_trace;
      o.timing = !no_timing;
      const PolynomialInput in = read_polynomial_file(input, mode);
      write_output(output, serialize_report(torus::analyze(in, o)));
    } else if (*quadratic) {
      const ordered_json verdict =
          quadratic_verdict(parse_rational(qa), parse_rational(qb), parse_rational(qc), common.analyze_options());
      write_output(output, verdict.dump(2) + "\n");
    } else if (*trace) {
      const PolynomialInput in = read_polynomial_file(input, mode);
      TraceOptions t = common.analyze_options().verify.trace;
      t.direction = direction;
      const EdgePoint start{parse_edge(edge), to_double(parse_rational(at))};
      auto emit = [&](const TracedCurve& c) {
        write_output(output, curve_csv(c));
        if (!crossings.empty()) write_output(crossings, crossings_csv(c));
        if (!svg.empty()) write_output(svg, curve_svg(c, in.label));
      };
      try {
        const TracedCurve c = trace_level_curve(in.h, start, t);
        emit(c);
        std::fprintf(stderr, "word %s, %s, closure error %.3g, max drift %.3g, min |grad H| %.3g\n", c.word.c_str(),
                     c.closed ? "closed" : "open", c.closure_error, c.max_drift, c.min_grad);
      } catch (const TraceError& e) {
        // The partial polyline is still useful for diagnosis.
        if (output != "-") emit(e.partial());
        throw;
      }
    } else if (*stress) {
      so.enumeration.mode = mode;
      so.inject_example = !no_inject;
      write_output(output, to_json(run_stress(so)).dump(2) + "\n");
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
