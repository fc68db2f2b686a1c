#include "torus/quadratic.hpp"

#include <cmath>

namespace torus {

QuadraticBbVerdict quadratic_bb_conditions(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 && b == 0 && c == 0) throw Error(ErrorKind::InvariantViolation, "(a, b, c) must not all vanish");
  QuadraticBbVerdict v;
  v.cond_a = b != 0 && c != 0 && b * c < 0 && abs(b) > abs(c);
  // (ac - b^2)(a + b - c)/b has the sign of (ac - b^2)(a + b - c) * b.
  v.cond_b = b != 0 && sign((a * c - b * b) * (a + b - c)) * sign(b) <= 0;
  v.cond_c = a * c < 0 || a * c > b * b;
  v.delta = b * b * b * b - 4 * a * b * b * c + 4 * a * c * c * c;
  v.cond_d = v.delta < 0 || a * (b - c) * (b * b + a * b - a * c) >= 0;
  v.exists = v.cond_a && v.cond_b && v.cond_c && v.cond_d;
  if (v.exists) {
    v.x0 = -c / b;
    v.level = a * c * c / (b * b);
  }
  return v;
}

int sign_plus_sqrt(const Rational& u, int s, const Rational& r) {
  if (r < 0) throw Error(ErrorKind::InvariantViolation, "square root of a negative number");
  if (r == 0) return sign(u);
  const int su = sign(u);
  if (su == 0 || su == s) return s;
  // Opposite signs: compare magnitudes via squares.
  const int cmp = sign(u * u - r);
  return cmp == 0 ? 0 : (cmp > 0 ? su : s);
}

namespace {

void require_denominators(const Rational& a, const Rational& b, const Rational& c) {
  if (b == 0 || a == c) {
    throw Error(ErrorKind::DegenerateDenominator, "closed-form aba solutions need b != 0 and a != c");
  }
}

RationalPoly pc_polynomial(const Rational& a, const Rational& b) {
  return RationalPoly({b * b * b * b, 4 * a * a * a - 8 * a * b * b, 8 * a * a, 4 * a}, Variable::c);
}

// Exact test 0 < (u + s*sqrt(r)) / d < 1.
bool in_unit_interval(const Rational& u, int s, const Rational& r, const Rational& d) {
  const int num = sign_plus_sqrt(u, s, r);
  const int lower = num * sign(d);                            // sign of the quotient
  const int upper = sign_plus_sqrt(u - d, s, r) * sign(d);    // sign of quotient - 1
  return lower > 0 && upper < 0;
}

}  // namespace

QuadraticAbaAnalysis quadratic_aba_analyze(const Rational& a, const Rational& b, const Rational& c) {
  require_denominators(a, b, c);
  QuadraticAbaAnalysis r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.radicand = b * b * b * b - 8 * a * b * b * c + 4 * a * c * (a + c) * (a + c);
  r.complex = r.radicand < 0;
  r.degenerate = r.radicand == 0;
  r.Pc = pc_polynomial(a, b);
  const Rational two_a_minus_b = 2 * a - b, two_a_plus_b = 2 * a + b;
  r.delta_P = 16 * a * a * b * b * two_a_minus_b * two_a_minus_b * two_a_plus_b * two_a_plus_b * (8 * a * a - 27 * b * b);
  if (r.Pc.degree() >= 1) r.rho = real_roots(r.Pc);
  if (r.complex) return r;

  r.Q = std::sqrt(to_double(r.radicand));
  // x = (-b^2 + 2c(a+c) +- Q) / (2b(a-c)),  y = (b^2 - 2a(a+c) -+ Q) / (2b(a-c))
  const Rational ux = -b * b + 2 * c * (a + c);
  const Rational uy = b * b - 2 * a * (a + c);
  const Rational d = 2 * b * (a - c);
  for (int s : {1, -1}) {
    QuadraticAbaPair p;
    p.x = (to_double(ux) + s * r.Q) / to_double(d);
    p.y = (to_double(uy) - s * r.Q) / to_double(d);
    p.interior = in_unit_interval(ux, s, r.radicand, d) && in_unit_interval(uy, -s, r.radicand, d);
    r.solutions.push_back(p);
    if (r.degenerate) break;
  }
  r.exists = !r.solutions.empty();
  for (const auto& p : r.solutions) r.exists = r.exists && p.interior;
  return r;
}

const char* to_string(AbaClause c) {
  switch (c) {
    case AbaClause::none: return "none";
    case AbaClause::case1_a: return "a<0 (a)";
    case AbaClause::case1_b: return "a<0 (b)";
    case AbaClause::case1_c: return "a<0 (c)";
    case AbaClause::case2_a: return "a>0 (a)";
    case AbaClause::case2_b: return "a>0 (b)";
  }
  return "?";
}

QuadraticAbaRegion quadratic_aba_region(const Rational& a, const Rational& b, const Rational& c) {
  require_denominators(a, b, c);
  QuadraticAbaRegion out;
  const RationalPoly pc = pc_polynomial(a, b);
  const auto rho = pc.degree() >= 1 ? real_roots(pc) : std::vector<IsolatedRoot>{};
  // c <= rho_k or c >= rho_k; a missing root makes the clause unsatisfiable.
  auto below_root = [&](std::size_t k) { return k < rho.size() && compare(c, rho[k]) <= 0; };
  auto above_root = [&](std::size_t k) { return k < rho.size() && compare(c, rho[k]) >= 0; };

  // b against -(2/3) sqrt(2/3) |a|, whose square is (8/27) a^2.
  const Rational threshold_sq = Rational(8, 27) * a * a;
  const bool below_threshold = b < 0 && b * b > threshold_sq;  // b < -(2/3)sqrt(2/3)|a|
  // L = (-(a+b) + sqrt(D))/2 and U = (-(a+b) - sqrt(D))/2 with D = a^2 + 2ab + 5b^2.
  const Rational D = a * a + 2 * a * b + 5 * b * b;
  const Rational u = 2 * c + a + b;
  const bool above_L = sign_plus_sqrt(u, -1, D) > 0;  // c > L
  const bool below_U = sign_plus_sqrt(u, 1, D) < 0;   // c < U
  const Rational m = (-a * a - a * b + b * b) / a;

  if (a < 0) {
    if (2 * a < b && below_threshold) {
      out.clause = AbaClause::case1_a;
      out.c_range = "L < c <= rho_1";
      out.exists = above_L && below_root(0);
    } else if (b < 0 && !below_threshold) {
      out.clause = AbaClause::case1_b;
      out.c_range = "L < c <= rho_3";
      out.exists = above_L && below_root(2);
    } else if (b > 0 && b < -a / 2) {
      out.clause = AbaClause::case1_c;
      out.c_range = "rho_2 <= c < (-a^2 - ab + b^2)/a";
      out.exists = above_root(1) && c < m;
    }
  } else if (a > 0) {
    if (-a / 2 < b && b < 0) {
      out.clause = AbaClause::case2_a;
      out.c_range = "(-a^2 - ab + b^2)/a < c <= rho_2";
      out.exists = m < c && below_root(1);
    } else if (b > 0 && b < 2 * a) {
      out.clause = AbaClause::case2_b;
      out.c_range = "rho_1 <= c < U";
      out.exists = above_root(0) && below_U;
    }
  }
  return out;
}

std::vector<BivariatePolynomial> symbolic_pc() {
  const auto a = BivariatePolynomial::monomial(1, 1, 0);
  const auto b = BivariatePolynomial::monomial(1, 0, 1);
  const Rational four(4), eight(8);
  return {b * b * b * b, four * (a * a * a) - eight * (a * b * b), eight * (a * a), four * a};
}

}  // namespace torus
