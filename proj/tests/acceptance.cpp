// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"
#include "torus/enumeration.hpp"
#include "torus/io.hpp"
#include "torus/quadratic.hpp"
#include "torus/report.hpp"
#include "torus/stress.hpp"
#include "torus/verification.hpp"

using namespace torus;
using test_support::random_h;
using test_support::random_rational;

namespace {

// Pinned tolerances and limits.
constexpr double kSixAbaTol = 5e-3;
constexpr double kSixAbaSeconds = 5.0;
constexpr double kFamilySeamTol = 1e-12;
constexpr double kFamilySeconds = 1.0;
constexpr int kQuadraticBbTrials = 10000;
constexpr double kQuadraticBbSeconds = 60.0;
constexpr int kQuadraticAbaTrials = 1000;
constexpr double kPairTol = 1e-10;
constexpr int kStressTrials = 1000;
constexpr int kOracleInputs = 200;
constexpr double kOracleTol = 1e-6;
constexpr int kOracleGrid = 256;
constexpr double kDriftTol = 1e-8;
constexpr double kClosureTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome six_aba_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  AnalyzeOptions o;
  o.enumeration.mode = ArithmeticMode::exact;
  const ordered_json report = analyze(read_polynomial_file(std::string(TORUS_FIXTURES) + "/example1_degree3.json"), o);
  const double elapsed = seconds_since(t0);
  const auto& aba = report["sections"]["aba"];
  std::vector<std::pair<double, double>> xy;
  int verified = 0;
  for (const auto& c : aba["candidates"]) {
    xy.emplace_back(c["x"].get<double>(), c["y"].get<double>());
    if (!c["verification"].is_null() && c["verification"]["verified"].get<bool>()) ++verified;
  }
  std::sort(xy.begin(), xy.end());
  const auto& published = test_support::six_aba_published();
  bool match = xy.size() == published.size();
  double worst = 0.0;
  for (std::size_t i = 0; match && i < xy.size(); ++i) {
    worst = std::max({worst, std::abs(xy[i].first - published[i].x), std::abs(xy[i].second - published[i].y)});
  }
  match = match && worst <= kSixAbaTol;
  Outcome out;
  out.pass = match && verified == 6 && elapsed < kSixAbaSeconds;
  out.detail = fmt("%zu aba candidates, max deviation %.2e, %d/6 verified, %.2fs", xy.size(), worst, verified, elapsed);
  return out;
}

Outcome family_enumeration() {
  Outcome out;
  EnumerationOptions o;
  o.mode = ArithmeticMode::exact;
  std::string bad;
  double slowest = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const EnumerationResult r = enumerate_bb(vertical_lines_family(n), o);
    const double elapsed = seconds_since(t0);
    slowest = std::max(slowest, elapsed);
    bool ok = static_cast<int>(r.candidates.size()) == n - 1 && elapsed < kFamilySeconds;
    std::vector<double> levels;
    for (std::size_t k = 0; ok && k < r.candidates.size(); ++k) {
      const CycleCandidate& c = r.candidates[k];
      ok = std::abs(c.x - static_cast<double>(k + 1) / n) <= kFamilySeamTol && c.filters.transversal &&
           c.filters.nondegenerate && c.filters.distinct_level;
      levels.push_back(c.levels.front());
    }
    std::sort(levels.begin(), levels.end());
    ok = ok && std::adjacent_find(levels.begin(), levels.end()) == levels.end();
    if (!ok) bad += (bad.empty() ? "" : ",") + std::to_string(n);
  }
  out.pass = bad.empty();
  out.detail = bad.empty() ? fmt("n = 2..8 all exact, slowest %.3fs", slowest) : "failing n = " + bad;
  return out;
}

Outcome quadratic_bb_vs_geometry() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240101);
  int agree = 0, trials = 0, exists = 0;
  std::string first;
  while (trials < kQuadraticBbTrials) {
    const Rational a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4), c = random_rational(rng, 9, 4);
    if (a == 0 && b == 0 && c == 0) continue;
    ++trials;
    const QuadraticBbVerdict verdict = quadratic_bb_conditions(a, b, c);
    const bool predicted = verdict.exists;
    const bool observed = quadratic_bb_geometric(a, b, c).exists;
    exists += observed ? 1 : 0;
    if (predicted == observed) {
      ++agree;
    } else if (first.empty()) {
      first = "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ") predicted " +
              (predicted ? "yes" : "no") + ", geometry " + (observed ? "yes" : "no") + ", conditions (a,b,c,d) = " +
              fmt("(%d,%d,%d,%d)", verdict.cond_a, verdict.cond_b, verdict.cond_c, verdict.cond_d);
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome out;
  out.pass = agree == trials && elapsed < kQuadraticBbSeconds;
  out.detail = fmt("%d/%d agree (%d with a cycle), %.1fs", agree, trials, exists, elapsed);
  if (!first.empty()) out.detail += "; first disagreement " + first;
  return out;
}

Outcome quadratic_aba_consistency() {
  // (i) b^4 - 8ab^2c + 4ac(a+c)^2 expanded in c over Q[a, b], against P(c).
  using Coeffs = std::vector<BivariatePolynomial>;
  const auto A = BivariatePolynomial::monomial(1, 1, 0);
  const auto B = BivariatePolynomial::monomial(1, 0, 1);
  const Coeffs pc = symbolic_pc();
  const Coeffs expanded{B * B * B * B, Rational(-8) * (A * B * B) + Rational(4) * (A * A * A), Rational(8) * (A * A),
                        Rational(4) * A};
  const bool identity = pc == expanded;

  // (ii) sign of the discriminant against the real-root count of P.
  std::mt19937_64 rng(303);
  int disc_ok = 0, disc_trials = 0;
  while (disc_trials < kQuadraticAbaTrials) {
    const Rational a = random_rational(rng, 12, 5), b = random_rational(rng, 12, 5);
    if (a == 0 || b == 0) continue;
    ++disc_trials;
    const auto q = quadratic_aba_analyze(a, b, a + 1);
    const int roots = count_distinct_real_roots(q.Pc);
    const int s = sign(q.delta_P);
    disc_ok += (s > 0 && roots == 3) || (s < 0 && roots == 1) || (s == 0 && roots < 3) ? 1 : 0;
  }

  // (iii) closed-form pairs against enumerate_aba.
  int pair_ok = 0, pair_trials = 0, positive = 0, negative = 0;
  while (pair_trials < kQuadraticAbaTrials) {
    const Rational a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4), c = random_rational(rng, 9, 4);
    if (b == 0 || a == c) continue;
    ++pair_trials;
    const auto q = quadratic_aba_analyze(a, b, c);
    const auto e = enumerate_aba(quadratic_form(a, b, c));
    bool ok = true;
    if (sign(q.radicand) < 0) {
      ++negative;
      ok = e.candidates.empty();
    } else if (sign(q.radicand) > 0) {
      ++positive;
      std::size_t interior = 0;
      for (const auto& p : q.solutions) {
        if (!p.interior) continue;
        ++interior;
        ok = ok && std::any_of(e.candidates.begin(), e.candidates.end(), [&](const CycleCandidate& cand) {
               return std::abs(cand.x - p.x) <= kPairTol && std::abs(cand.y - p.y) <= kPairTol;
             });
      }
      ok = ok && e.candidates.size() == interior;
    }
    pair_ok += ok ? 1 : 0;
  }
  Outcome out;
  out.pass = identity && disc_ok == disc_trials && pair_ok == pair_trials;
  out.detail = fmt("identity %s; discriminant %d/%d; pairs %d/%d (%d positive, %d negative radicands)",
                   identity ? "holds" : "FAILS", disc_ok, disc_trials, pair_ok, pair_trials, positive, negative);
  return out;
}

Outcome bound_stress() {
  Outcome out;
  std::string detail;
  bool sharp = false;
  for (int n = 2; n <= 4; ++n) {
    StressOptions o;
    o.degree = n;
    o.trials = kStressTrials;
    o.seed = 1000 + n;
    try {
      const StressSummary s = run_stress(o);
      detail += fmt("n=%d max", n);
      for (const auto& t : s.types) {
        detail += fmt(" %s %d/%d", to_string(t.type), t.max_candidates, t.bound);
        out.pass = out.pass && t.max_candidates <= t.bound;
      }
      if (n == 3) sharp = s.injected && (*s.injected)[2] == 6;
      detail += "; ";
    } catch (const Error& e) {
      out.pass = false;
      detail += fmt("n=%d %s; ", n, e.what());
    }
  }
  out.pass = out.pass && sharp;
  out.detail = detail + (sharp ? "injected cubic attains aba = 6" : "injected cubic does not attain 6");
  return out;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(4242);
  int identical = 0;
  int total_candidates = 0;
  for (int i = 0; i < kOracleInputs; ++i) {
    const auto h = random_h(rng, 1 + i % 4);
    std::vector<CycleCandidate> exact;
    std::vector<CycleType> types;
    for (CycleType t : {CycleType::bb, CycleType::aa, CycleType::aba, CycleType::bab}) {
      try {
        for (const auto& c : enumerate(h, t).candidates) {
          if (c.filters.interior) exact.push_back(c);
        }
        types.push_back(t);
      } catch (const Error&) {
        // Continuum or common component: no finite set to compare.
      }
    }
    std::vector<CycleCandidate> scanned;
    for (const auto& c : brute_force_cycle_scan(h, kOracleGrid)) {
      if (c.filters.interior && std::find(types.begin(), types.end(), c.type) != types.end()) scanned.push_back(c);
    }
    auto covered = [](const std::vector<CycleCandidate>& from, const std::vector<CycleCandidate>& in) {
      return std::all_of(from.begin(), from.end(), [&](const CycleCandidate& e) {
        return std::any_of(in.begin(), in.end(), [&](const CycleCandidate& s) {
          return s.type == e.type && std::abs(s.x - e.x) <= kOracleTol && std::abs(s.y - e.y) <= kOracleTol;
        });
      });
    };
    const bool same = exact.size() == scanned.size() && covered(exact, scanned) && covered(scanned, exact);
    identical += same ? 1 : 0;
    total_candidates += static_cast<int>(exact.size());
  }
  Outcome out;
  out.pass = identical == kOracleInputs;
  out.detail = fmt("%d/%d inputs identical (%d interior solutions)", identical, kOracleInputs, total_candidates);
  return out;
}

Outcome conservation_and_closure() {
  std::vector<std::pair<BivariatePolynomial, CycleCandidate>> cycles;
  const auto e1 = six_aba_cubic();
  for (const auto& c : enumerate_aba(e1).candidates) cycles.emplace_back(e1, c);
  for (int n = 2; n <= 8; ++n) {
    const auto h = vertical_lines_family(n);
    for (const auto& c : enumerate_bb(h).candidates) cycles.emplace_back(h, c);
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto h = random_h(rng, 2 + i % 3);
    for (CycleType t : {CycleType::bb, CycleType::aa, CycleType::aba, CycleType::bab}) {
      try {
        for (const auto& c : enumerate(h, t).candidates) {
          if (c.filters.passed()) cycles.emplace_back(h, c);
        }
      } catch (const Error&) {
      }
    }
  }
  int verified = 0, good = 0;
  double worst_drift = 0.0, worst_closure = 0.0;
  for (const auto& [h, cand] : cycles) {
    const VerificationRecord rec = verify_cycle(h, cand);
    if (!rec.verified) continue;
    ++verified;
    worst_drift = std::max(worst_drift, rec.max_drift);
    worst_closure = std::max(worst_closure, rec.closure_error);
    bool ok = rec.max_drift <= kDriftTol && rec.closure_error <= kClosureTol;
    for (const EdgePoint& s : cand.seam_points()) {
      try {
        const TracedCurve again = trace_level_curve(h, s);
        ok = ok && again.closed && same_cyclic_word(again.word, rec.word);
      } catch (const Error&) {
        ok = false;
      }
    }
    good += ok ? 1 : 0;
  }
  Outcome out;
  out.pass = verified > 0 && good == verified;
  out.detail = fmt("%d/%d verified cycles pass (max drift %.1e, max closure error %.1e)", good, verified, worst_drift,
                   worst_closure);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Six-aba cubic reproduction", six_aba_reproduction},
      {"Vertical-lines family", family_enumeration},
      {"Quadratic bb criteria vs geometry", quadratic_bb_vs_geometry},
      {"Quadratic aba closed-form consistency", quadratic_aba_consistency},
      {"Bound stress", bound_stress},
      {"Oracle equivalence", oracle_equivalence},
      {"Conservation and closure", conservation_and_closure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
