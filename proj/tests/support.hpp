#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "torus/bivariate.hpp"
#include "torus/families.hpp"
#include "torus/geometry.hpp"
#include "torus/rational.hpp"

namespace test_support {

using torus::BivariatePolynomial;
using torus::Rational;

struct XY {
  double x, y;
};

// Rounded closing solutions listed for the cubic example.
inline const std::vector<XY>& six_aba_published() {
  static const std::vector<XY> v{{0.25, 0.516}, {0.33, 0.490}, {0.41, 0.494},
                                 {0.49, 0.507}, {0.57, 0.511}, {0.65, 0.485}};
  return v;
}

// Small random rational p/q with |p| <= num, 1 <= q <= den.
inline Rational random_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> p(-num, num);
  std::uniform_int_distribution<int> q(1, den);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return r;
}

// Random H of total degree exactly n with zero constant term.
inline BivariatePolynomial random_h(std::mt19937_64& rng, int n, int num = 9, int den = 4) {
  BivariatePolynomial h;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) h.add_monomial(random_rational(rng, num, den), k - j, j);
  }
  if (h.degree() < n) h.add_monomial(1, n, 0);
  return h;
}

// One RK4 step of X_H = (-H_y, H_x).
inline torus::Vec2 rk4(const torus::FloatBivariate& f, torus::Vec2 p, double dt) {
  auto field = [&](double x, double y) {
    const auto [hx, hy] = f.gradient(x, y);
    return torus::Vec2{-hy, hx};
  };
  const torus::Vec2 k1 = field(p.x, p.y);
  const torus::Vec2 k2 = field(p.x + dt / 2 * k1.x, p.y + dt / 2 * k1.y);
  const torus::Vec2 k3 = field(p.x + dt / 2 * k2.x, p.y + dt / 2 * k2.y);
  const torus::Vec2 k4 = field(p.x + dt * k3.x, p.y + dt * k3.y);
  return {p.x + dt / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), p.y + dt / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y)};
}

// Integrates the flow (time reversed when dt < 0) from p until the orbit leaves
// the closed square; returns the interpolated boundary point, or NaNs.
inline torus::Vec2 flow_exit(const torus::FloatBivariate& f, torus::Vec2 p, double dt, long max_steps = 2000000) {
  auto outside = [](const torus::Vec2& q) { return q.x < 0 || q.x > 1 || q.y < 0 || q.y > 1; };
  for (long i = 0; i < max_steps; ++i) {
    const torus::Vec2 q = rk4(f, p, dt);
    if (outside(q)) {
      double s = 1.0;
      if (q.x < 0) s = std::min(s, p.x / (p.x - q.x));
      if (q.x > 1) s = std::min(s, (1 - p.x) / (q.x - p.x));
      if (q.y < 0) s = std::min(s, p.y / (p.y - q.y));
      if (q.y > 1) s = std::min(s, (1 - p.y) / (q.y - p.y));
      return {p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)};
    }
    p = q;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {nan, nan};
}

}  // namespace test_support
