#include "torus/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "torus/homogeneous.hpp"
#include "torus/resultant.hpp"

namespace torus {

const char* to_string(CycleType t) {
  switch (t) {
    case CycleType::aa: return "aa";
    case CycleType::bb: return "bb";
    case CycleType::aba: return "aba";
    case CycleType::bab: return "bab";
  }
  return "?";
}

const char* to_string(ArithmeticMode m) { return m == ArithmeticMode::exact ? "exact" : "float"; }

int theoretical_bound(CycleType type, int degree) {
  if (degree < 1) return 0;
  return (type == CycleType::aa || type == CycleType::bb) ? degree - 1 : degree * (degree - 1);
}

std::vector<EdgePoint> CycleCandidate::seam_points() const {
  switch (type) {
    case CycleType::bb: return {{Edge::bottom, x}, {Edge::top, x}};
    case CycleType::aa: return {{Edge::left, y}, {Edge::right, y}};
    case CycleType::aba:
    case CycleType::bab: return {{Edge::left, y}, {Edge::top, x}, {Edge::bottom, x}, {Edge::right, y}};
  }
  return {};
}

std::pair<BivariatePolynomial, BivariatePolynomial> closing_system(const BivariatePolynomial& h, CycleType type) {
  auto in_x = [](const RationalPoly& p) { return BivariatePolynomial::from_univariate(p, Variable::x); };
  auto in_y = [](const RationalPoly& p) { return BivariatePolynomial::from_univariate(p, Variable::y); };
  const auto vertical = in_x(closing_difference(h, Direction::vertical));
  const auto horizontal = in_y(closing_difference(h, Direction::horizontal));
  if (type == CycleType::aba) {
    return {in_y(restrict_to_edge(h, Edge::left)) - in_x(restrict_to_edge(h, Edge::top)), vertical + horizontal};
  }
  if (type == CycleType::bab) {
    return {in_y(restrict_to_edge(h, Edge::left)) - in_x(restrict_to_edge(h, Edge::bottom)), horizontal - vertical};
  }
  throw Error(ErrorKind::InvariantViolation, "closing_system is defined for aba and bab only");
}

namespace {

void require_hypotheses(const BivariatePolynomial& h) {
  if (h.is_zero() || h.degree() < 1) throw Error(ErrorKind::InvariantViolation, "H must have degree at least 1");
  if (h.constant_term() != 0) {
    throw Error(ErrorKind::ConstantTermNonzero, "H(0,0) = " + to_string(h.constant_term()) + " must be 0");
  }
}

double coefficient_scale(const BivariatePolynomial& h) {
  double s = 1.0;
  for (const auto& [e, v] : h.monomials()) s = std::max(s, std::abs(v.get_d()));
  return s;
}

RootOptions root_options(const EnumerationOptions& o) { return {o.root_tolerance, o.boundary_epsilon}; }

// Sign of q at the root, honouring the arithmetic mode (0 means tangency).
int sign_at_root(const RationalPoly& q, const IsolatedRoot& r, const EnumerationOptions& o) {
  if (o.mode == ArithmeticMode::exact) return sign_at(q, r);
  const double v = to_double(q)(r.value);
  if (std::abs(v) <= o.tangency_tol) return 0;
  return v > 0 ? 1 : -1;
}

// Normal components on an edge pair: (bottom, top) or (left, right). Sewing
// means nu+ = N_e and nu- = -N_partner share a sign.
struct SeamVerdict {
  bool transversal = false;
  bool sewing = false;
};

SeamVerdict judge_seam(const BivariatePolynomial& h, Edge e, const IsolatedRoot& r, const EnumerationOptions& o) {
  const int s_here = sign_at_root(normal_component(h, e), r, o);
  const int s_there = sign_at_root(normal_component(h, opposite(e)), r, o);
  SeamVerdict v;
  v.transversal = s_here != 0 && s_there != 0;
  v.sewing = v.transversal && s_here == -s_there;
  return v;
}

bool gradient_nonzero(const FloatBivariate& f, double x, double y, double tol) {
  const auto [gx, gy] = f.gradient(x, y);
  return std::hypot(gx, gy) > tol;
}

double level_gap(const CycleCandidate& a, const CycleCandidate& b) {
  double g = 0.0;
  for (std::size_t i = 0; i < a.levels.size() && i < b.levels.size(); ++i) g = std::max(g, std::abs(a.levels[i] - b.levels[i]));
  return g;
}

void finish(EnumerationResult& result, const EnumerationOptions& o) {
  auto& c = result.candidates;
  std::sort(c.begin(), c.end(), [&](const CycleCandidate& p, const CycleCandidate& q) {
    if (result.type == CycleType::aa) return p.y < q.y;
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  result.min_level_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i].filters.distinct_level = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      const double g = level_gap(c[i], c[j]);
      if (j > i) result.min_level_gap = std::min(result.min_level_gap, g);
      if (g <= o.level_gap_tol) c[i].filters.distinct_level = false;
    }
  }
  if (static_cast<int>(c.size()) > result.bound) {
    throw Error(ErrorKind::BoundViolation, std::string(to_string(result.type)) + ": " + std::to_string(c.size()) +
                                               " candidates exceed the bound " + std::to_string(result.bound));
  }
}

EnumerationResult enumerate_single(const BivariatePolynomial& h, CycleType type, const EnumerationOptions& o) {
  require_hypotheses(h);
  const bool vertical = type == CycleType::bb;
  EnumerationResult result;
  result.type = type;
  result.degree = h.degree();
  result.bound = theoretical_bound(type, result.degree);
  result.eliminant = closing_difference(h, vertical ? Direction::vertical : Direction::horizontal);
  if (result.eliminant.is_zero()) {
    throw Error(ErrorKind::DegenerateContinuum, std::string(vertical ? "H(x,0) - H(x,1)" : "H(0,y) - H(1,y)") +
                                                    " vanishes identically: a continuum of non-isolated orbits");
  }
  const FloatBivariate f(h);
  const double scale = coefficient_scale(h);
  const Edge first = vertical ? Edge::bottom : Edge::left;
  for (const auto& r : real_roots_in_open_interval(result.eliminant, 0, 1, root_options(o))) {
    CycleCandidate c;
    c.type = type;
    (vertical ? c.x_root : c.y_root) = r;
    (vertical ? c.x : c.y) = r.value;
    c.multiplicity = r.multiplicity;
    c.near_boundary = r.near_boundary;
    const double a0 = vertical ? f.value(r.value, 0.0) : f.value(0.0, r.value);
    const double a1 = vertical ? f.value(r.value, 1.0) : f.value(1.0, r.value);
    c.levels = {a0};
    c.residual = std::abs(a0 - a1);
    c.filters.interior = !r.near_boundary;
    c.filters.closing_residual = o.mode == ArithmeticMode::exact || c.residual <= o.closing_tol * scale;
    const SeamVerdict seam = judge_seam(h, first, r, o);
    c.filters.transversal = seam.transversal;
    c.filters.sewing = seam.sewing;
    const bool grad = vertical ? gradient_nonzero(f, c.x, 0.0, o.tangency_tol) && gradient_nonzero(f, c.x, 1.0, o.tangency_tol)
                               : gradient_nonzero(f, 0.0, c.y, o.tangency_tol) && gradient_nonzero(f, 1.0, c.y, o.tangency_tol);
    c.filters.nondegenerate = c.multiplicity == 1 && grad;
    result.candidates.push_back(std::move(c));
  }
  finish(result, o);
  return result;
}

// Newton on (P, Q~) from a paired root; keeps the start if Newton wanders.
void polish(const FloatBivariate& fp, const FloatBivariate& fq, double& x, double& y) {
  double px = x, py = y;
  for (int it = 0; it < 6; ++it) {
    const double p = fp.value(px, py), q = fq.value(px, py);
    const auto [pxd, pyd] = fp.gradient(px, py);
    const auto [qxd, qyd] = fq.gradient(px, py);
    const double det = pxd * qyd - pyd * qxd;
    if (det == 0.0) return;
    const double dx = (p * qyd - q * pyd) / det;
    const double dy = (q * pxd - p * qxd) / det;
    px -= dx;
    py -= dy;
    if (std::abs(px - x) > 1e-9 || std::abs(py - y) > 1e-9) return;
    if (std::abs(dx) + std::abs(dy) < 1e-17) break;
  }
  x = px;
  y = py;
}

// Both equations free of `v`: the system reduces to common roots of two
// univariates in the other variable, each giving a whole segment of solutions.
bool univariate_continuum(const BivariatePolynomial& p, const BivariatePolynomial& q, Variable v, const EnumerationOptions& o) {
  const Variable other = v == Variable::x ? Variable::y : Variable::x;
  const auto pc = p.as_polynomial_in(other);
  const auto qc = q.as_polynomial_in(other);
  auto collapse = [&](const std::vector<RationalPoly>& c) {
    std::vector<Rational> coeffs;
    for (const auto& entry : c) coeffs.push_back(entry.coeff(0));
    return RationalPoly(coeffs, other);
  };
  const RationalPoly g = gcd(collapse(pc), collapse(qc));
  return g.degree() >= 1 && !real_roots_in_open_interval(g, 0, 1, root_options(o)).empty();
}

EnumerationResult enumerate_pair(const BivariatePolynomial& h, CycleType type, const EnumerationOptions& o) {
  require_hypotheses(h);
  EnumerationResult result;
  result.type = type;
  result.degree = h.degree();
  result.bound = theoretical_bound(type, result.degree);
  const auto [P, Qt] = closing_system(h, type);
  if (P.is_zero() || Qt.is_zero()) {
    throw Error(ErrorKind::CommonComponent, std::string(to_string(type)) + " closing system has an identically zero equation");
  }
  if (P.degree() >= 1 && Qt.degree() >= 1) {
    result.points_at_infinity =
        share_point_at_infinity(at_infinity(homogenize(P, P.degree())), at_infinity(homogenize(Qt, Qt.degree())));
  }
  for (Variable v : {Variable::x, Variable::y}) {
    if (P.degree_in(v) == 0 && Qt.degree_in(v) == 0) {
      if (univariate_continuum(P, Qt, v, o)) {
        throw Error(ErrorKind::CommonComponent, std::string(to_string(type)) + " closing curves share a line");
      }
      result.eliminant = RationalPoly::constant(1, Variable::y);
      finish(result, o);
      return result;
    }
  }
  result.eliminant = resultant(P, Qt, Variable::x);
  const RationalPoly rx = resultant(P, Qt, Variable::y);
  const auto ys = result.eliminant.degree() >= 1 ? real_roots_in_open_interval(result.eliminant, 0, 1, root_options(o))
                                                 : std::vector<IsolatedRoot>{};
  const auto xs = rx.degree() >= 1 ? real_roots_in_open_interval(rx, 0, 1, root_options(o)) : std::vector<IsolatedRoot>{};

  const FloatBivariate fh(h), fp(P), fq(Qt);
  const double scale = coefficient_scale(h);
  for (const auto& xr : xs) {
    for (const auto& yr : ys) {
      double x = xr.value, y = yr.value;
      const double joint = std::max(std::abs(fp.value(x, y)), std::abs(fq.value(x, y)));
      if (joint > o.pairing_tol * scale) continue;
      polish(fp, fq, x, y);
      CycleCandidate c;
      c.type = type;
      c.x = x;
      c.y = y;
      c.x_root = xr;
      c.y_root = yr;
      c.near_boundary = xr.near_boundary || yr.near_boundary;
      const double left = fh.value(0.0, y), right = fh.value(1.0, y);
      const double bottom = fh.value(x, 0.0), top = fh.value(x, 1.0);
      if (type == CycleType::aba) {
        c.levels = {left, bottom};
        c.residual = std::max(std::abs(left - top), std::abs(bottom - right));
      } else {
        c.levels = {left, top};
        c.residual = std::max(std::abs(left - bottom), std::abs(top - right));
      }
      const auto [pxd, pyd] = fp.gradient(x, y);
      const auto [qxd, qyd] = fq.gradient(x, y);
      const double norms = std::hypot(pxd, pyd) * std::hypot(qxd, qyd);
      c.jacobian_condition = norms > 0 ? std::abs(pxd * qyd - pyd * qxd) / norms : 0.0;
      const bool simple = c.jacobian_condition > 1e-8;
      c.multiplicity = simple ? 1 : std::max(xr.multiplicity, yr.multiplicity);
      c.filters.interior = !c.near_boundary;
      c.filters.closing_residual = o.mode == ArithmeticMode::exact || c.residual <= o.closing_tol * scale;
      const SeamVerdict horizontal_seam = judge_seam(h, Edge::bottom, xr, o);
      const SeamVerdict vertical_seam = judge_seam(h, Edge::left, yr, o);
      c.filters.transversal = horizontal_seam.transversal && vertical_seam.transversal;
      c.filters.sewing = horizontal_seam.sewing && vertical_seam.sewing;
      bool grad = true;
      for (const auto& s : c.seam_points()) {
        const auto pt = s.point();
        grad = grad && gradient_nonzero(fh, pt.x, pt.y, o.tangency_tol);
      }
      c.filters.nondegenerate = simple && grad;
      result.candidates.push_back(std::move(c));
    }
  }
  finish(result, o);
  return result;
}

}  // namespace

EnumerationResult enumerate_bb(const BivariatePolynomial& h, const EnumerationOptions& options) {
  return enumerate_single(h, CycleType::bb, options);
}

EnumerationResult enumerate_aa(const BivariatePolynomial& h, const EnumerationOptions& options) {
  return enumerate_single(h, CycleType::aa, options);
}

EnumerationResult enumerate_aba(const BivariatePolynomial& h, const EnumerationOptions& options) {
  return enumerate_pair(h, CycleType::aba, options);
}

EnumerationResult enumerate_bab(const BivariatePolynomial& h, const EnumerationOptions& options) {
  return enumerate_pair(h, CycleType::bab, options);
}

EnumerationResult enumerate(const BivariatePolynomial& h, CycleType type, const EnumerationOptions& options) {
  switch (type) {
    case CycleType::aa: return enumerate_aa(h, options);
    case CycleType::bb: return enumerate_bb(h, options);
    case CycleType::aba: return enumerate_aba(h, options);
    case CycleType::bab: return enumerate_bab(h, options);
  }
  throw Error(ErrorKind::InvariantViolation, "unknown cycle type");
}

}  // namespace torus
