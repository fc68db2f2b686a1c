#pragma once

#include <vector>

#include "torus/rational.hpp"
#include "torus/univariate.hpp"

namespace torus {

struct RootOptions {
  // Final bracket width.
  double tolerance = 1e-12;
  // Roots closer than this to either end of the search interval are flagged.
  double boundary_epsilon = 1e-9;
};

// A real root r isolated in the open bracket (lo, hi) of its square-free
// factor, or pinned exactly when lo == hi == r. `factor` has exactly one root
// in the closed bracket.
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  double value = 0.0;
  int multiplicity = 1;
  bool exact = false;
  bool near_boundary = false;
  bool certified = true;
  RationalPoly factor;
};

class SturmSequence {
 public:
  // Counts are of distinct roots; p should be square-free when the ends of a
  // counted interval may be roots.
  explicit SturmSequence(const RationalPoly& p);

  int variations_at(const Rational& t) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  // Distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }
  int count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

  // The chain ends in gcd(p, p'); p is square-free iff that is a constant.
  bool squarefree() const { return chain_.empty() || chain_.back().size() <= 1; }

 private:
  // Integer coefficients (each member is primitive), lowest degree first.
  std::vector<std::vector<mpz_class>> chain_;
};

// Sign of p(t), computed with integer arithmetic when p has integer coefficients.
int sign_eval(const RationalPoly& p, const Rational& t);

// Every distinct real root in the open interval (lo, hi), ordered increasingly.
// Throws IdenticallyZero when p is the zero polynomial.
std::vector<IsolatedRoot> real_roots_in_open_interval(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                                      const RootOptions& options = {});

// Every distinct real root.
std::vector<IsolatedRoot> real_roots(const RationalPoly& p, const RootOptions& options = {});

// Number of distinct real roots (Sturm count over the whole line).
int count_distinct_real_roots(const RationalPoly& p);

// Whether q vanishes at the algebraic number represented by r (exact).
bool vanishes_at(const RationalPoly& q, const IsolatedRoot& r);

// Exact sign of q at the algebraic number represented by r.
int sign_at(const RationalPoly& q, const IsolatedRoot& r);

// Exact sign of (c - r): -1, 0 or +1.
int compare(const Rational& c, const IsolatedRoot& r);

// Narrows the bracket of r to width at most `width` (exact bisection).
void refine(IsolatedRoot& r, const Rational& width);

// Cauchy bound: every complex root has modulus below the returned value.
Rational root_bound(const RationalPoly& p);

}  // namespace torus
