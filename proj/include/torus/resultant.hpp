#pragma once

#include <vector>

#include "torus/bivariate.hpp"

namespace torus {

// Determinant of a square matrix over Q[t] by fraction-free (Bareiss)
// elimination; every intermediate division is exact.
RationalPoly bareiss_determinant(std::vector<std::vector<RationalPoly>> m);

// Sylvester resultant of p and q with respect to `eliminate`; the result is a
// polynomial in the other variable. Throws IdenticallyZero if either input is
// zero and CommonComponent if the resultant vanishes identically.
RationalPoly resultant(const BivariatePolynomial& p, const BivariatePolynomial& q, Variable eliminate);

}  // namespace torus
