#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torus {

using Rational = mpq_class;

// Accepts "p/q", integers and decimal notation ("-1.25", "3e-4"); the value is
// taken exactly, so "0.1" is 1/10.
Rational parse_rational(std::string_view text);

// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Exact binary value of a finite double.
Rational rational_from_double(double value);

// Nearest double (mpq_get_d alone truncates toward zero).
double to_double(const Rational& r);

// Canonical text: "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace torus
