#include "torus/families.hpp"

namespace torus {

BivariatePolynomial vertical_lines_family(int n) {
  if (n < 1) throw Error(ErrorKind::InvariantViolation, "family degree must be at least 1");
  RationalPoly prod = RationalPoly::constant(1);
  for (int i = 1; i < n; ++i) prod = prod * RationalPoly({fraction(-i, n), Rational(1)});
  BivariatePolynomial h = BivariatePolynomial::monomial(n % 2 == 1 ? 1 : -1, n, 0);
  for (int i = 0; i <= prod.degree(); ++i) h.add_monomial(prod.coeff(i), i, 1);
  return h;
}

BivariatePolynomial quadratic_form(const Rational& a, const Rational& b, const Rational& c) {
  BivariatePolynomial h;
  h.add_monomial(a, 2, 0);
  h.add_monomial(b, 1, 1);
  h.add_monomial(c, 0, 2);
  return h;
}

BivariatePolynomial six_aba_cubic() {
  return BivariatePolynomial::from_terms({
      {1, 0, parse_rational("-1.071920970")},
      {1, 1, parse_rational("0.2912880768")},
      {2, 0, parse_rational("2.500039387")},
      {2, 1, parse_rational("0.5370427213")},
      {3, 0, parse_rational("-1.853838675")},
      {3, 1, parse_rational("0.002642824354")},
      {3, 2, parse_rational("-0.5394212632")},
  });
}

}  // namespace torus
