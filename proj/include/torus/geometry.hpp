#pragma once

#include <utility>
#include <vector>

#include "torus/bivariate.hpp"
#include "torus/edge.hpp"

namespace torus {

// Canonical representative in [0,1)^2 of a point of the glued square.
struct TorusPoint {
  double x = 0.0;
  double y = 0.0;
};

TorusPoint canonicalize(double x, double y);

// Distance in the flat torus metric.
double torus_distance(double x1, double y1, double x2, double y2);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// A point on the boundary of the square, at coordinate t along its edge (x for
// bottom/top, y for left/right).
struct EdgePoint {
  Edge edge = Edge::bottom;
  double t = 0.0;

  EdgePoint partner() const { return {opposite(edge), t}; }
  Vec2 point() const;
  bool is_corner() const { return t <= 0.0 || t >= 1.0; }

  friend bool operator==(const EdgePoint&, const EdgePoint&) = default;
};

// Inward unit normal: bottom (0,1), top (0,-1), left (1,0), right (-1,0).
Vec2 inward_normal(Edge e);

enum class FilippovClass { sewing, sliding, escape, tangency };

const char* to_string(FilippovClass c);

// Sign table for nu_plus = X(e).n and nu_minus = X(partner(e)).n, n the inward
// normal at e. Values with magnitude <= tol count as zero.
FilippovClass classify_signs(double nu_plus, double nu_minus, double tol);

struct GeometryOptions {
  double tangency_tol = 1e-10;
  // Evaluate at the exact binary value of t with zero tolerance.
  bool exact = false;
};

// X_H . n along an edge as a polynomial in the edge coordinate; X_H = (-H_y, H_x).
// bottom: H_x(t,0), top: -H_x(t,1), left: -H_y(0,t), right: H_y(1,t).
RationalPoly normal_component(const BivariatePolynomial& h, Edge edge);

// (nu_plus, nu_minus) at e.
std::pair<double, double> normal_components(const BivariatePolynomial& h, const EdgePoint& e);

// Throws CornerPoint for corners.
FilippovClass classify_edge_point(const BivariatePolynomial& h, const EdgePoint& e, const GeometryOptions& options = {});

// True per point iff the normal component is nonzero at the point and at its partner.
std::vector<bool> transversality_check(const BivariatePolynomial& h, const std::vector<EdgePoint>& points,
                                       const GeometryOptions& options = {});

}  // namespace torus
