#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torus/edge.hpp"
#include "torus/rational.hpp"
#include "torus/univariate.hpp"

namespace torus {

// One coefficient a_{k,j} of the monomial x^(k-j) y^j.
struct Term {
  int k = 0;
  int j = 0;
  Rational value;
};

// Exact bivariate polynomial with rational coefficients. Terms are addressed
// either by exponents (px, py) or by the (k, j) convention of the first
// integral, where a_{k,j} multiplies x^(k-j) y^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;

  static BivariatePolynomial from_terms(const std::vector<Term>& terms);
  static BivariatePolynomial from_univariate(const RationalPoly& p, Variable as);
  static BivariatePolynomial constant(const Rational& value);
  static BivariatePolynomial monomial(const Rational& value, int px, int py);

  void add_monomial(const Rational& value, int px, int py);

  Rational coefficient(int px, int py) const;
  Rational term(int k, int j) const { return coefficient(k - j, j); }
  Rational constant_term() const { return coefficient(0, 0); }

  // Total degree; 0 for the zero polynomial.
  int degree() const;
  int degree_in(Variable v) const;
  bool is_zero() const { return coeffs_.empty(); }

  // Nonzero terms ordered by (k, j).
  std::vector<Term> terms() const;
  const std::map<std::pair<int, int>, Rational>& monomials() const { return coeffs_; }

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;

  BivariatePolynomial partial_x() const;
  BivariatePolynomial partial_y() const;

  // H(y, x).
  BivariatePolynomial swapped() const;
  // H(s*x + t, y) for rationals s, t.
  BivariatePolynomial affine_in_x(const Rational& s, const Rational& t) const;

  // p(x, y0) as a polynomial in x, and p(x0, y) as a polynomial in y.
  RationalPoly at_y(const Rational& y0) const;
  RationalPoly at_x(const Rational& x0) const;

  // Coefficients with respect to powers of `v`; entry i multiplies v^i and is a
  // polynomial in the other variable.
  std::vector<RationalPoly> as_polynomial_in(Variable v) const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> coeffs_;  // (px, py) -> nonzero coefficient
};

enum class Direction { vertical, horizontal };

// H(x,0), H(x,1), H(0,y), H(1,y).
RationalPoly restrict_to_edge(const BivariatePolynomial& p, Edge edge);

// vertical: H(x,0) - H(x,1) in x; horizontal: H(0,y) - H(1,y) in y. The
// degree-n terms cancel, so the result has degree at most n-1.
RationalPoly closing_difference(const BivariatePolynomial& p, Direction direction);

// (dH/dx, dH/dy).
std::pair<BivariatePolynomial, BivariatePolynomial> gradient(const BivariatePolynomial& p);

// Dense double-precision copy with value, gradient and Hessian, for the curve
// tracer and numeric scans.
class FloatBivariate {
 public:
  FloatBivariate() = default;
  explicit FloatBivariate(const BivariatePolynomial& p);

  double value(double x, double y) const { return eval(value_, x, y); }
  std::pair<double, double> gradient(double x, double y) const {
    return {eval(dx_, x, y), eval(dy_, x, y)};
  }
  struct Hessian {
    double xx, xy, yy;
  };
  Hessian hessian(double x, double y) const { return {eval(dxx_, x, y), eval(dxy_, x, y), eval(dyy_, x, y)}; }

 private:
  using Table = std::vector<std::vector<double>>;  // [px][py]
  static Table table(const BivariatePolynomial& p);
  static double eval(const Table& t, double x, double y);

  Table value_, dx_, dy_, dxx_, dxy_, dyy_;
};

}  // namespace torus
