#pragma once

#include "torus/bivariate.hpp"

namespace torus {

// H = (-1)^(n+1) x^n + y * prod_{i=1}^{n-1} (x - i/n): degree n with one bb
// cycle on each vertical line x = k/n.
BivariatePolynomial vertical_lines_family(int n);

// H = a x^2 + b x y + c y^2.
BivariatePolynomial quadratic_form(const Rational& a, const Rational& b, const Rational& c);

// Cubic with six aba closing solutions, coefficients as printed to ten
// significant digits (decimals read exactly).
BivariatePolynomial six_aba_cubic();

}  // namespace torus
