#include "torus/geometry.hpp"

#include <cmath>

namespace torus {

namespace {

double wrap(double v) {
  double r = v - std::floor(v);
  return r >= 1.0 ? 0.0 : r;
}

double circle_gap(double a, double b) {
  const double d = std::abs(wrap(a) - wrap(b));
  return std::min(d, 1.0 - d);
}

}  // namespace

TorusPoint canonicalize(double x, double y) { return {wrap(x), wrap(y)}; }

double torus_distance(double x1, double y1, double x2, double y2) {
  return std::hypot(circle_gap(x1, x2), circle_gap(y1, y2));
}

Vec2 EdgePoint::point() const {
  switch (edge) {
    case Edge::bottom: return {t, 0.0};
    case Edge::top: return {t, 1.0};
    case Edge::left: return {0.0, t};
    case Edge::right: return {1.0, t};
  }
  return {};
}

Vec2 inward_normal(Edge e) {
  switch (e) {
    case Edge::bottom: return {0.0, 1.0};
    case Edge::top: return {0.0, -1.0};
    case Edge::left: return {1.0, 0.0};
    case Edge::right: return {-1.0, 0.0};
  }
  return {};
}

const char* to_string(FilippovClass c) {
  switch (c) {
    case FilippovClass::sewing: return "sewing";
    case FilippovClass::sliding: return "sliding";
    case FilippovClass::escape: return "escape";
    case FilippovClass::tangency: return "tangency";
  }
  return "?";
}

FilippovClass classify_signs(double nu_plus, double nu_minus, double tol) {
  if (std::abs(nu_plus) <= tol || std::abs(nu_minus) <= tol) return FilippovClass::tangency;
  if ((nu_plus > 0) == (nu_minus > 0)) return FilippovClass::sewing;
  return nu_plus < 0 ? FilippovClass::sliding : FilippovClass::escape;
}

RationalPoly normal_component(const BivariatePolynomial& h, Edge edge) {
  const auto [hx, hy] = gradient(h);
  switch (edge) {
    case Edge::bottom: return hx.at_y(0);
    case Edge::top: return -hx.at_y(1);
    case Edge::left: return -hy.at_x(0);
    case Edge::right: return hy.at_x(1);
  }
  return RationalPoly::zero();
}

namespace {

// X_H(p) . n for an edge point p and a normal given by `normal_edge`.
template <class T>
T field_dot_normal(const BivariatePolynomial& hx, const BivariatePolynomial& hy, const EdgePoint& p, Edge normal_edge,
                   const T& t) {
  const T zero(0), one(1);
  T px = t, py = t;
  switch (p.edge) {
    case Edge::bottom: py = zero; break;
    case Edge::top: py = one; break;
    case Edge::left: px = zero; break;
    case Edge::right: px = one; break;
  }
  const Vec2 n = inward_normal(normal_edge);
  // X_H = (-H_y, H_x)
  return T(-n.x) * hy.evaluate(px, py) + T(n.y) * hx.evaluate(px, py);
}

void require_not_corner(const EdgePoint& e) {
  if (e.is_corner()) {
    throw Error(ErrorKind::CornerPoint, std::string(to_string(e.edge)) + " edge point at t=" + std::to_string(e.t) +
                                            " is a corner of the square");
  }
}

}  // namespace

std::pair<double, double> normal_components(const BivariatePolynomial& h, const EdgePoint& e) {
  const auto [hx, hy] = gradient(h);
  return {field_dot_normal<double>(hx, hy, e, e.edge, e.t), field_dot_normal<double>(hx, hy, e.partner(), e.edge, e.t)};
}

FilippovClass classify_edge_point(const BivariatePolynomial& h, const EdgePoint& e, const GeometryOptions& options) {
  require_not_corner(e);
  if (options.exact) {
    const auto [hx, hy] = gradient(h);
    const Rational t = rational_from_double(e.t);
    const Rational plus = field_dot_normal<Rational>(hx, hy, e, e.edge, t);
    const Rational minus = field_dot_normal<Rational>(hx, hy, e.partner(), e.edge, t);
    return classify_signs(sign(plus), sign(minus), 0.0);
  }
  const auto [plus, minus] = normal_components(h, e);
  return classify_signs(plus, minus, options.tangency_tol);
}

std::vector<bool> transversality_check(const BivariatePolynomial& h, const std::vector<EdgePoint>& points,
                                       const GeometryOptions& options) {
  std::vector<bool> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    require_not_corner(p);
    if (options.exact) {
      const Rational t = rational_from_double(p.t);
      out.push_back(normal_component(h, p.edge)(t) != 0 && normal_component(h, opposite(p.edge))(t) != 0);
    } else {
      const auto [plus, minus] = normal_components(h, p);
      out.push_back(std::abs(plus) > options.tangency_tol && std::abs(minus) > options.tangency_tol);
    }
  }
  return out;
}

}  // namespace torus
