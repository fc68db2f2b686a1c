#include "torus/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "torus/families.hpp"
#include "torus/roots.hpp"

namespace torus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_coefficient_sum(const BivariatePolynomial& h) {
  double s = 0.0;
  for (const auto& [e, v] : h.monomials()) s += std::abs(v.get_d());
  return s;
}

bool inside(double x, double y) { return x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0; }

std::string describe(const EdgePoint& e) {
  std::ostringstream os;
  os.precision(12);
  os << to_string(e.edge) << " t=" << e.t;
  return os.str();
}

class Tracer {
 public:
  Tracer(const BivariatePolynomial& h, const TraceOptions& o)
      : f_(h), o_(o), residual_target_(std::max(4e-16 * abs_coefficient_sum(h), 1e-15)) {}

  TracedCurve run(const EdgePoint& start) {
    if (start.t <= o_.corner_tol || start.t >= 1.0 - o_.corner_tol) {
      throw Error(ErrorKind::CornerPoint, "trace start " + describe(start) + " is a corner of the square");
    }
    const Vec2 s = start.point();
    auto [gx, gy] = f_.gradient(s.x, s.y);
    if (std::hypot(gx, gy) < o_.grad_floor) fail(ErrorKind::StartOnCriticalPoint, "gradient vanishes at " + describe(start));

    // Enter the square on whichever side of the glued seam the flow points inward.
    const double nu_here = o_.direction * inward(start);
    const double nu_there = o_.direction * inward(start.partner());
    EdgePoint entry = start;
    if (nu_here > o_.tangency_tol) {
      entry = start;
    } else if (nu_there > o_.tangency_tol) {
      entry = start.partner();
    } else if (std::abs(nu_here) <= o_.tangency_tol || std::abs(nu_there) <= o_.tangency_tol) {
      fail(ErrorKind::TangencyEncountered, "field tangent to the boundary at " + describe(start));
    } else {
      fail(ErrorKind::NonSewingCrossing, "flow leaves the square on both sides of " + describe(start));
    }

    curve_.start = entry;
    curve_.word.push_back(seam_letter(entry.edge));
    curve_.min_grad = kInf;
    const Vec2 p0 = entry.point();
    curve_.level = f_.value(p0.x, p0.y);
    begin_segment(p0, curve_.level);

    double step = o_.initial_step;
    double x = p0.x, y = p0.y;
    for (;;) {
      const double level = curve_.segment_levels.back();
      double nx = x, ny = y;
      const double used = advance(x, y, level, step, nx, ny);
      if (inside(nx, ny)) {
        x = nx;
        y = ny;
        record(x, y, level);
        continue;
      }
      const EdgePoint exit = locate_exit(x, y, level, used);
      const Vec2 q = exit.point();
      record(q.x, q.y, level);

      Crossing c;
      c.exit = exit;
      c.entry = exit.partner();
      const Vec2 n = inward_normal(exit.edge);
      c.nu_plus = dot(field(q), n);
      const Vec2 r = c.entry.point();
      c.nu_minus = dot(field(r), n);
      c.cls = classify_signs(c.nu_plus, c.nu_minus, o_.tangency_tol);
      const double next_level = f_.value(r.x, r.y);
      c.level_jump = std::abs(next_level - level);
      curve_.max_level_jump = std::max(curve_.max_level_jump, c.level_jump);
      curve_.crossings.push_back(c);
      curve_.word.push_back(seam_letter(exit.edge));

      if (c.cls == FilippovClass::tangency) fail(ErrorKind::TangencyEncountered, "tangency at " + describe(exit));
      if (c.cls != FilippovClass::sewing) {
        fail(ErrorKind::NonSewingCrossing, std::string(to_string(c.cls)) + " crossing at " + describe(exit));
      }

      const double gap = torus_distance(r.x, r.y, p0.x, p0.y);
      if (gap <= o_.closure_capture) {
        curve_.closure_error = gap;
        curve_.closed = gap <= o_.closure_tol;
        return curve_;
      }
      if (static_cast<int>(curve_.crossings.size()) >= o_.max_crossings) {
        fail(ErrorKind::MaxCrossingsExceeded, "no closure after " + std::to_string(o_.max_crossings) + " crossings");
      }
      x = r.x;
      y = r.y;
      begin_segment(r, next_level);
    }
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw TraceError(kind, message, curve_); }

  static double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

  // X_H = (-H_y, H_x), independent of the tracing direction.
  Vec2 field(const Vec2& p) const {
    auto [hx, hy] = f_.gradient(p.x, p.y);
    return {-hy, hx};
  }

  double inward(const EdgePoint& e) const { return dot(field(e.point()), inward_normal(e.edge)); }

  void begin_segment(const Vec2& p, double level) {
    curve_.segments.emplace_back();
    curve_.segment_levels.push_back(level);
    record(p.x, p.y, level);
  }

  void record(double x, double y, double level) {
    curve_.segments.back().push_back({x, y});
    curve_.max_drift = std::max(curve_.max_drift, std::abs(f_.value(x, y) - level));
    auto [gx, gy] = f_.gradient(x, y);
    const double g = std::hypot(gx, gy);
    curve_.min_grad = std::min(curve_.min_grad, g);
    if (g < o_.grad_floor) fail(ErrorKind::GradientFloorHit, "gradient below floor on the level curve");
    if (++curve_.steps > o_.max_steps) fail(ErrorKind::StepLimitExceeded, "step limit reached");
  }

  Vec2 tangent(double x, double y) const {
    auto [gx, gy] = f_.gradient(x, y);
    const double g = std::hypot(gx, gy);
    return {o_.direction * -gy / g, o_.direction * gx / g};
  }

  double curvature(double x, double y) const {
    auto [gx, gy] = f_.gradient(x, y);
    const auto hs = f_.hessian(x, y);
    const double g = std::hypot(gx, gy);
    return std::abs(hs.xx * gy * gy - 2.0 * hs.xy * gx * gy + hs.yy * gx * gx) / (g * g * g);
  }

  // Newton projection onto {H = level} along the gradient.
  bool correct(double& x, double& y, double level, int& iterations) const {
    for (iterations = 0; iterations < 12; ++iterations) {
      const double r = f_.value(x, y) - level;
      if (std::abs(r) <= residual_target_) return true;
      auto [gx, gy] = f_.gradient(x, y);
      const double g2 = gx * gx + gy * gy;
      if (g2 < o_.grad_floor * o_.grad_floor) return false;
      x -= r * gx / g2;
      y -= r * gy / g2;
    }
    return std::abs(f_.value(x, y) - level) <= 0.01 * o_.level_drift_tol;
  }

  // One predictor-corrector step from (x, y); updates the adaptive step and
  // returns the step length actually used.
  double advance(double x, double y, double level, double& step, double& nx, double& ny) {
    const Vec2 t = tangent(x, y);
    const double kappa = curvature(x, y);
    const double cap = kappa > 0.0 ? std::sqrt(8.0 * o_.max_sagitta / kappa) : kInf;
    double h = std::clamp(std::min(step, cap), o_.min_step, o_.max_step);
    for (;;) {
      nx = x + h * t.x;
      ny = y + h * t.y;
      const double px = nx, py = ny;
      int iterations = 0;
      const bool converged = correct(nx, ny, level, iterations);
      bool ok = converged;
      if (ok) {
        const Vec2 t2 = tangent(nx, ny);
        ok = std::hypot(nx - px, ny - py) <= 0.2 * h && dot(t, t2) > 0.8;
      }
      if (ok) {
        if (iterations <= 2) step = h * 1.5;
        else if (iterations >= 5) step = h * 0.5;
        else step = h;
        return h;
      }
      if (h <= o_.min_step) {
        // The curve turns sharply at the edge (it meets the boundary at a
        // critical point): let the edge event classify it.
        if (converged && !inside(nx, ny)) return h;
        fail(ErrorKind::StepLimitExceeded, "corrector failed at the minimum step");
      }
      h = std::max(0.5 * h, o_.min_step);
    }
  }

  // The corrected step of length h from (x, y) leaves the square: bisect the
  // step length to find the first outside point, then project onto the edge.
  EdgePoint locate_exit(double x, double y, double level, double h) {
    const Vec2 t = tangent(x, y);
    double lo = 0.0, hi = h;
    double ox = x + h * t.x, oy = y + h * t.y;
    int iterations = 0;
    correct(ox, oy, level, iterations);
    for (int i = 0; i < 80 && hi - lo > o_.edge_tol; ++i) {
      const double mid = 0.5 * (lo + hi);
      double mx = x + mid * t.x, my = y + mid * t.y;
      correct(mx, my, level, iterations);
      if (inside(mx, my)) {
        lo = mid;
      } else {
        hi = mid;
        ox = mx;
        oy = my;
      }
    }
    const std::array<std::pair<double, Edge>, 4> violations = {
        std::pair{-oy, Edge::bottom}, std::pair{oy - 1.0, Edge::top}, std::pair{-ox, Edge::left},
        std::pair{ox - 1.0, Edge::right}};
    const Edge edge = std::max_element(violations.begin(), violations.end())->second;
    const bool horizontal = is_horizontal(edge);
    const double fixed = (edge == Edge::top || edge == Edge::right) ? 1.0 : 0.0;
    double s = horizontal ? ox : oy;
    for (int i = 0; i < 50; ++i) {
      const double px = horizontal ? s : fixed, py = horizontal ? fixed : s;
      const double r = f_.value(px, py) - level;
      auto [gx, gy] = f_.gradient(px, py);
      const double d = horizontal ? gx : gy;
      if (std::abs(d) <= o_.tangency_tol) fail(ErrorKind::TangencyEncountered, "level curve tangent to the " + std::string(to_string(edge)) + " edge");
      const double ds = r / d;
      s -= ds;
      if (std::abs(ds) <= 1e-16) break;
    }
    const EdgePoint e{edge, s};
    if (s <= o_.corner_tol || s >= 1.0 - o_.corner_tol) fail(ErrorKind::CornerEncountered, "level curve reaches a corner");
    return e;
  }

  FloatBivariate f_;
  TraceOptions o_;
  double residual_target_;
  TracedCurve curve_;
};

bool same_point(const EdgePoint& a, const EdgePoint& b, double tol) {
  return a.edge == b.edge && std::abs(a.t - b.t) <= tol;
}

std::string period(const std::string& closed_word) {
  return closed_word.size() > 1 ? closed_word.substr(0, closed_word.size() - 1) : closed_word;
}

}  // namespace

TracedCurve trace_level_curve(const BivariatePolynomial& h, const EdgePoint& start, const TraceOptions& options) {
  return Tracer(h, options).run(start);
}

char seam_letter(Edge e) { return is_horizontal(e) ? 'b' : 'a'; }

std::string cycle_word(CycleType type) {
  switch (type) {
    case CycleType::aa: return "aa";
    case CycleType::bb: return "bb";
    case CycleType::aba: return "aba";
    case CycleType::bab: return "bab";
  }
  return "";
}

bool same_cyclic_word(const std::string& a, const std::string& b) {
  const std::string pa = period(a), pb = period(b);
  if (pa.size() != pb.size()) return false;
  const std::string doubled = pa + pa;
  const std::string reversed(pb.rbegin(), pb.rend());
  return doubled.find(pb) != std::string::npos || doubled.find(reversed) != std::string::npos;
}

std::vector<SeamArc> declared_arcs(const CycleCandidate& cand) {
  const EdgePoint left{Edge::left, cand.y}, right{Edge::right, cand.y};
  const EdgePoint bottom{Edge::bottom, cand.x}, top{Edge::top, cand.x};
  switch (cand.type) {
    case CycleType::bb: return {{bottom, top}};
    case CycleType::aa: return {{left, right}};
    case CycleType::aba: return {{left, top}, {bottom, right}};
    case CycleType::bab: return {{left, bottom}, {top, right}};
  }
  return {};
}

std::vector<EdgePoint> level_boundary_points(const BivariatePolynomial& h, double level) {
  std::vector<EdgePoint> out;
  const Rational k = rational_from_double(level);
  const double scale = std::max(1.0, std::abs(level));
  for (Edge e : kAllEdges) {
    const RationalPoly p = restrict_to_edge(h, e) - RationalPoly::constant(k, Variable::x);
    if (p.is_zero()) {
      out.push_back({e, 0.5});
      continue;
    }
    for (const auto& r : real_roots_in_open_interval(p, Rational(0), Rational(1))) out.push_back({e, to_double(r.value)});
  }
  // Corners, reported on the bottom and top edges.
  for (const EdgePoint& c : {EdgePoint{Edge::bottom, 0.0}, EdgePoint{Edge::bottom, 1.0}, EdgePoint{Edge::top, 0.0},
                             EdgePoint{Edge::top, 1.0}}) {
    const Vec2 q = c.point();
    if (std::abs(to_double(h.evaluate(Rational(q.x), Rational(q.y))) - level) <= 1e-12 * scale) out.push_back(c);
  }
  return out;
}

VerificationRecord verify_cycle(const BivariatePolynomial& h, const CycleCandidate& cand, const VerifyOptions& options) {
  VerificationRecord rec;
  const std::vector<EdgePoint> seams = cand.seam_points();

  for (double level : cand.levels) {
    for (const EdgePoint& p : level_boundary_points(h, level)) {
      const Vec2 q = p.point();
      auto near = [&](const EdgePoint& s) {
        const Vec2 v = s.point();
        return torus_distance(q.x, q.y, v.x, v.y) <= options.seam_tol;
      };
      if (std::any_of(seams.begin(), seams.end(), near)) continue;
      if (std::any_of(rec.stray_points.begin(), rec.stray_points.end(), near)) continue;
      rec.stray_points.push_back(p);
    }
  }
  rec.stray_level_incidences = static_cast<int>(rec.stray_points.size());

  std::optional<ErrorKind> trace_failure;
  std::string trace_message;
  try {
    rec.curve = trace_level_curve(h, seams.front(), options.trace);
  } catch (const TraceError& e) {
    rec.curve = e.partial();
    trace_failure = e.kind();
    trace_message = e.what();
  } catch (const Error& e) {
    rec.failure = e.kind();
    rec.message = e.what();
    return rec;
  }

  const TracedCurve& c = *rec.curve;
  rec.word = c.word;
  rec.closed = c.closed;
  rec.closure_error = c.closure_error;
  rec.max_drift = c.max_drift;
  rec.min_grad = c.min_grad;
  rec.max_level_jump = c.max_level_jump;
  rec.all_sewing = !c.crossings.empty() && std::all_of(c.crossings.begin(), c.crossings.end(), [](const Crossing& x) {
    return x.cls == FilippovClass::sewing;
  });

  // Every completed arc must join the two ends of a declared arc.
  const std::vector<SeamArc> arcs = declared_arcs(cand);
  for (std::size_t i = 0; i < c.crossings.size(); ++i) {
    const EdgePoint from = i == 0 ? c.start : c.crossings[i - 1].entry;
    const EdgePoint to = c.crossings[i].exit;
    const bool declared = std::any_of(arcs.begin(), arcs.end(), [&](const SeamArc& a) {
      return (same_point(from, a.from, options.seam_tol) && same_point(to, a.to, options.seam_tol)) ||
             (same_point(from, a.to, options.seam_tol) && same_point(to, a.from, options.seam_tol));
    });
    if (!declared) {
      rec.failure = ErrorKind::ExtraEdgeIncidence;
      rec.message = "arc from " + describe(from) + " ends at undeclared boundary point " + describe(to);
      return rec;
    }
  }
  if (trace_failure) {
    rec.failure = trace_failure;
    rec.message = trace_message;
    return rec;
  }
  if (!c.closed) {
    rec.failure = ErrorKind::ClosureFailed;
    std::ostringstream os;
    os << "closure error " << c.closure_error << " exceeds " << options.trace.closure_tol;
    rec.message = os.str();
    return rec;
  }
  if (!same_cyclic_word(c.word, cycle_word(cand.type))) {
    rec.failure = ErrorKind::WordMismatch;
    rec.message = "traced word " + c.word + " for a " + cycle_word(cand.type) + " candidate";
    return rec;
  }
  if (options.strict_level_set && rec.stray_level_incidences > 0) {
    rec.failure = ErrorKind::ExtraEdgeIncidence;
    rec.message = "level set meets the boundary at " + describe(rec.stray_points.front());
    return rec;
  }
  rec.verified = true;
  return rec;
}

double hausdorff_distance(const TracedCurve& a, const TracedCurve& b) {
  auto one_sided = [](const TracedCurve& from, const TracedCurve& to) {
    double worst = 0.0;
    for (const auto& poly : from.segments) {
      for (const TorusPoint& p : poly) {
        double best = kInf;
        for (const auto& target : to.segments) {
          for (std::size_t i = 0; i + 1 < target.size(); ++i) {
            const TorusPoint& u = target[i];
            const TorusPoint& v = target[i + 1];
            const double dx = v.x - u.x, dy = v.y - u.y;
            const double len2 = dx * dx + dy * dy;
            const double s = len2 > 0.0 ? std::clamp(((p.x - u.x) * dx + (p.y - u.y) * dy) / len2, 0.0, 1.0) : 0.0;
            best = std::min(best, std::hypot(p.x - u.x - s * dx, p.y - u.y - s * dy));
          }
        }
        worst = std::max(worst, best);
      }
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

void require_verified(const VerificationRecord& record) {
  if (record.failure) throw Error(*record.failure, record.message);
}

namespace {

void dedupe_push(std::vector<CycleCandidate>& out, CycleCandidate c) {
  for (const auto& o : out) {
    if (o.type == c.type && std::hypot(o.x - c.x, o.y - c.y) <= 1e-8) return;
  }
  out.push_back(std::move(c));
}

bool interior(double t) { return t > 1e-9 && t < 1.0 - 1e-9; }

// Roots in [0,1] of a scalar function sampled on a uniform grid: sign changes
// are bisected, touching roots are found by Newton on the derivative at local
// minima of |d|.
std::vector<double> scan_1d(const std::function<double(double)>& d, const std::function<double(double)>& d1,
                            const std::function<double(double)>& d2, int grid, double scale) {
  std::vector<double> v(static_cast<std::size_t>(grid) + 1);
  for (int i = 0; i <= grid; ++i) v[static_cast<std::size_t>(i)] = d(static_cast<double>(i) / grid);
  std::vector<double> roots;
  const double zero_tol = 1e-12 * scale;
  if (std::all_of(v.begin(), v.end(), [&](double s) { return std::abs(s) <= zero_tol; })) return roots;
  for (int i = 0; i <= grid; ++i) {
    const double t = static_cast<double>(i) / grid;
    const double a = v[static_cast<std::size_t>(i)];
    if (a == 0.0) {
      roots.push_back(t);
      continue;
    }
    if (i < grid) {
      const double b = v[static_cast<std::size_t>(i) + 1];
      if (a * b < 0.0) {
        double lo = t, hi = static_cast<double>(i + 1) / grid, flo = a;
        while (hi - lo > 1e-15) {
          const double mid = 0.5 * (lo + hi);
          const double fm = d(mid);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
    }
    if (i > 0 && i < grid) {
      const double prev = v[static_cast<std::size_t>(i) - 1], next = v[static_cast<std::size_t>(i) + 1];
      if (prev * a > 0.0 && a * next > 0.0 && std::abs(a) <= std::abs(prev) && std::abs(a) <= std::abs(next)) {
        double s = t;
        for (int k = 0; k < 60; ++k) {
          const double dd = d2(s);
          if (dd == 0.0) break;
          const double step = d1(s) / dd;
          s -= step;
          if (std::abs(step) <= 1e-16) break;
        }
        if (s >= 0.0 && s <= 1.0 && std::abs(d(s)) <= zero_tol) roots.push_back(s);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > 1e-8) unique.push_back(r);
  }
  return unique;
}

// A function of one coordinate with its first two derivatives.
struct Line {
  std::function<double(double)> f, d1, d2;
};

// F1 = u1(y) - v1(x), F2 = v2(x) - u2(y): the four-point closing equations are
// separable, so the lattice needs only one-dimensional samples.
struct PairSystem {
  Line u1, v1, v2, u2;
};

struct Samples {
  std::vector<double> f, d1, d2;
};

Samples sample(const Line& l, int grid, double offset) {
  Samples s;
  const int count = offset == 0.0 ? grid + 1 : grid;
  for (int i = 0; i < count; ++i) {
    const double t = (static_cast<double>(i) + offset) / grid;
    s.f.push_back(l.f(t));
    s.d1.push_back(l.d1(t));
    s.d2.push_back(l.d2(t));
  }
  return s;
}

std::vector<std::pair<double, double>> scan_2d(const PairSystem& s, int grid, double scale) {
  const double hc = 1.0 / grid;
  const Samples nu1 = sample(s.u1, grid, 0.0), nv1 = sample(s.v1, grid, 0.0);
  const Samples nv2 = sample(s.v2, grid, 0.0), nu2 = sample(s.u2, grid, 0.0);
  const Samples cu1 = sample(s.u1, grid, 0.5), cv1 = sample(s.v1, grid, 0.5);
  const Samples cv2 = sample(s.v2, grid, 0.5), cu2 = sample(s.u2, grid, 0.5);
  const double zero_tol = 1e-12 * scale;
  auto vanishes = [&](const Samples& u, const Samples& v) {
    for (std::size_t k = 0; k < u.f.size(); ++k) {
      if (std::abs(u.f[k] - v.f[0]) > zero_tol || std::abs(v.f[k] - u.f[0]) > zero_tol) return false;
    }
    return true;
  };
  // An identically zero equation leaves a continuum, not isolated solutions.
  if (vanishes(nu1, nv1) || vanishes(nu2, nv2)) return {};
  const double r = 0.75 * hc;
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(grid); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(grid); ++j) {
      auto straddles = [&](const Samples& u, const Samples& v, double su) {
        double lo = kInf, hi = -kInf;
        for (std::size_t di = 0; di < 2; ++di) {
          for (std::size_t dj = 0; dj < 2; ++dj) {
            const double val = su * (u.f[j + dj] - v.f[i + di]);
            lo = std::min(lo, val);
            hi = std::max(hi, val);
          }
        }
        return lo <= 0.0 && hi >= 0.0;
      };
      // A curve may enter and leave a cell through one side; bound the
      // variation over the cell by a second-order Taylor estimate.
      auto near = [&](const Samples& u, const Samples& v) {
        const double val = u.f[j] - v.f[i];
        return std::abs(val) <= std::hypot(u.d1[j], v.d1[i]) * r + (std::abs(u.d2[j]) + std::abs(v.d2[i])) * r * r;
      };
      const bool hit1 = straddles(nu1, nv1, 1.0) || near(cu1, cv1);
      if (!hit1) continue;
      const bool hit2 = straddles(nu2, nv2, -1.0) || near(cu2, cv2);
      if (!hit2) continue;
      const double cx = (static_cast<double>(i) + 0.5) * hc, cy = (static_cast<double>(j) + 0.5) * hc;
      double x = cx, y = cy;
      bool converged = false;
      for (int it = 0; it < 100; ++it) {
        const double f1 = s.u1.f(y) - s.v1.f(x), f2 = s.v2.f(x) - s.u2.f(y);
        if (std::abs(f1) <= zero_tol && std::abs(f2) <= zero_tol) {
          converged = true;
          break;
        }
        const double a = -s.v1.d1(x), b = s.u1.d1(y), c = s.v2.d1(x), d = -s.u2.d1(y);
        const double det = a * d - b * c;
        if (det == 0.0 || !std::isfinite(det)) break;
        x -= (f1 * d - f2 * b) / det;
        y -= (f2 * a - f1 * c) / det;
        if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x - cx) > 0.5 || std::abs(y - cy) > 0.5) break;
      }
      if (!converged || x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& p) {
        return std::hypot(p.first - x, p.second - y) <= 1e-8;
      });
      if (!seen) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

std::vector<CycleCandidate> brute_force_cycle_scan(const BivariatePolynomial& h, int grid) {
  if (grid < 64) throw Error(ErrorKind::InvariantViolation, "brute-force grid must be at least 64");
  const FloatBivariate f(h);
  const double scale = std::max(1.0, abs_coefficient_sum(h));
  std::vector<CycleCandidate> out;

  auto hx = [&](double x, double y) { return f.gradient(x, y).first; };
  auto hy = [&](double x, double y) { return f.gradient(x, y).second; };

  // bb: H(x,0) = H(x,1).
  for (double x : scan_1d([&](double t) { return f.value(t, 0.0) - f.value(t, 1.0); },
                          [&](double t) { return hx(t, 0.0) - hx(t, 1.0); },
                          [&](double t) { return f.hessian(t, 0.0).xx - f.hessian(t, 1.0).xx; }, grid, scale)) {
    if (x <= 0.0 || x >= 1.0) continue;
    CycleCandidate c;
    c.type = CycleType::bb;
    c.x = x;
    c.levels = {f.value(x, 0.0)};
    c.filters.interior = interior(x);
    dedupe_push(out, c);
  }
  // aa: H(0,y) = H(1,y).
  for (double y : scan_1d([&](double t) { return f.value(0.0, t) - f.value(1.0, t); },
                          [&](double t) { return hy(0.0, t) - hy(1.0, t); },
                          [&](double t) { return f.hessian(0.0, t).yy - f.hessian(1.0, t).yy; }, grid, scale)) {
    if (y <= 0.0 || y >= 1.0) continue;
    CycleCandidate c;
    c.type = CycleType::aa;
    c.y = y;
    c.levels = {f.value(0.0, y)};
    c.filters.interior = interior(y);
    dedupe_push(out, c);
  }

  // aba: H(0,y) = H(x,1) and H(x,0) = H(1,y); bab: H(0,y) = H(x,0) and H(x,1) = H(1,y).
  for (CycleType type : {CycleType::aba, CycleType::bab}) {
    const double first_row = type == CycleType::aba ? 1.0 : 0.0;
    const double second_row = 1.0 - first_row;
    auto vertical = [&](double x0) {
      return Line{[&f, x0](double t) { return f.value(x0, t); }, [&f, x0](double t) { return f.gradient(x0, t).second; },
                  [&f, x0](double t) { return f.hessian(x0, t).yy; }};
    };
    auto horizontal = [&](double y0) {
      return Line{[&f, y0](double t) { return f.value(t, y0); }, [&f, y0](double t) { return f.gradient(t, y0).first; },
                  [&f, y0](double t) { return f.hessian(t, y0).xx; }};
    };
    const PairSystem s{vertical(0.0), horizontal(first_row), horizontal(second_row), vertical(1.0)};
    const auto solutions = scan_2d(s, grid, scale);
    // Two curves of degree n without a common component meet in at most n^2
    // points; more means a continuum of non-isolated solutions.
    if (solutions.size() > static_cast<std::size_t>(h.degree() * h.degree())) continue;
    for (const auto& [x, y] : solutions) {
      if (x <= 0.0 || x >= 1.0 || y <= 0.0 || y >= 1.0) continue;
      CycleCandidate c;
      c.type = type;
      c.x = x;
      c.y = y;
      c.levels = {f.value(0.0, y), f.value(x, type == CycleType::aba ? 0.0 : 1.0)};
      c.filters.interior = interior(x) && interior(y);
      dedupe_push(out, c);
    }
  }
  return out;
}

GeometricBbVerdict quadratic_bb_geometric(const Rational& a, const Rational& b, const Rational& c,
                                          const VerifyOptions& options) {
  GeometricBbVerdict v;
  const BivariatePolynomial h = quadratic_form(a, b, c);
  EnumerationResult bb;
  try {
    bb = enumerate_bb(h);
  } catch (const Error& e) {
    v.reason = e.what();
    return v;
  }
  for (const CycleCandidate& cand : bb.candidates) {
    if (!cand.filters.passed()) continue;
    v.x0 = cand.x;
    VerifyOptions strict = options;
    strict.strict_level_set = true;
    VerificationRecord rec = verify_cycle(h, cand, strict);
    v.exists = rec.verified;
    v.reason = rec.message;
    v.record = std::move(rec);
    return v;
  }
  v.reason = bb.candidates.empty() ? "no bb closing solution in (0,1)" : "bb candidate fails the enumeration filters";
  return v;
}

}  // namespace torus
