#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "torus/bivariate.hpp"

namespace torus {

// Homogeneous polynomial in X, Y, Z; keys are exponent triples summing to the
// degree.
class HomogeneousPolynomial {
 public:
  explicit HomogeneousPolynomial(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  void add(const Rational& value, int ex, int ey, int ez);
  Rational coefficient(int ex, int ey, int ez) const;
  const std::map<std::array<int, 3>, Rational>& monomials() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& X, const Rational& Y, const Rational& Z) const;

  friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int degree_;
  std::map<std::array<int, 3>, Rational> coeffs_;
};

// Z^d p(X/Z, Y/Z) with d = target_degree. Throws DegreeTooSmall if d < deg p.
HomogeneousPolynomial homogenize(const BivariatePolynomial& p, int target_degree);

// Sets Z = 1.
BivariatePolynomial dehomogenize(const HomogeneousPolynomial& h);

// The binary form h(X, Y, 0), as coefficients of X^(d-j) Y^j for j = 0..d.
std::vector<Rational> at_infinity(const HomogeneousPolynomial& h);

// Whether two binary forms have a common zero in CP^1 (complex points count).
bool share_point_at_infinity(const std::vector<Rational>& f, const std::vector<Rational>& g);

}  // namespace torus
