#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/bivariate.hpp"
#include "torus/roots.hpp"

namespace torus {

// Existence test for the bb cycle of H = a x^2 + b x y + c y^2, condition by
// condition:
//   (a) b != 0, c != 0, bc < 0, |b| > |c|
//   (b) (ac - b^2)(a + b - c) / b <= 0
//   (c) ac < 0 or ac > b^2
//   (d) if delta >= 0 then a(b - c)(b^2 + ab - ac) >= 0, delta = b^4 - 4ab^2c + 4ac^3
struct QuadraticBbVerdict {
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool cond_d = false;
  bool exists = false;
  Rational delta;
  // Witness when exists: seam x0 = -c/b and level k = a c^2 / b^2.
  std::optional<Rational> x0;
  std::optional<Rational> level;
};

// Throws InvariantViolation for (0, 0, 0).
QuadraticBbVerdict quadratic_bb_conditions(const Rational& a, const Rational& b, const Rational& c);

struct QuadraticAbaPair {
  double x = 0.0;
  double y = 0.0;
  bool interior = false;
};

struct QuadraticAbaAnalysis {
  Rational a, b, c;
  // b^4 - 8ab^2c + 4ac(a+c)^2; Q is its square root when nonnegative.
  Rational radicand;
  bool complex = false;
  bool degenerate = false;  // radicand == 0: one double solution
  double Q = 0.0;
  // P(c) = 4a c^3 + 8a^2 c^2 + (4a^3 - 8ab^2) c + b^4, variable c.
  RationalPoly Pc;
  // 16 a^2 b^2 (2a - b)^2 (2a + b)^2 (8a^2 - 27b^2)
  Rational delta_P;
  // Real roots of P(c), increasing.
  std::vector<IsolatedRoot> rho;
  // Closed-form closing solutions: two pairs, one when degenerate, none when complex.
  std::vector<QuadraticAbaPair> solutions;
  // Radicand >= 0 and every closed-form pair lies in (0,1)^2.
  bool exists = false;
};

// Throws DegenerateDenominator when b = 0 or a = c.
QuadraticAbaAnalysis quadratic_aba_analyze(const Rational& a, const Rational& b, const Rational& c);

enum class AbaClause { none, case1_a, case1_b, case1_c, case2_a, case2_b };

const char* to_string(AbaClause c);

struct QuadraticAbaRegion {
  // The clause whose b-range contains b (none if no range does).
  AbaClause clause = AbaClause::none;
  // Whether c also lies in that clause's c-range.
  bool exists = false;
  std::string c_range;
};

// Throws DegenerateDenominator when b = 0 or a = c.
QuadraticAbaRegion quadratic_aba_region(const Rational& a, const Rational& b, const Rational& c);

// P(c) with symbolic coefficients: entry i multiplies c^i and is a polynomial
// in (a, b) stored with a as "x" and b as "y".
std::vector<BivariatePolynomial> symbolic_pc();

// Exact sign of u + s*sqrt(r) for r >= 0 and s in {-1, +1}.
int sign_plus_sqrt(const Rational& u, int s, const Rational& r);

}  // namespace torus
