#include "torus/univariate.hpp"

#include <sstream>

namespace torus {

RationalPoly primitive_part(const RationalPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return p * factor;
}

ZPoly to_integer_poly(const RationalPoly& p) {
  const RationalPoly q = primitive_part(p);
  ZPoly out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

RationalPoly from_integer_poly(const ZPoly& p, Variable var) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return RationalPoly(std::move(c), var);
}

namespace {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

int pseudo_remainder(const ZPoly& a, const ZPoly& b, ZPoly& r) {
  if (b.empty()) throw Error(ErrorKind::IdenticallyZero, "pseudo-division by the zero polynomial");
  r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  int steps = 0;
  mpz_class lead;
  while (!r.empty() && r.size() - 1 >= db) {
    lead = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lead * b[j];
    trim(r);
    ++steps;
  }
  return (sgn(lb) < 0 && steps % 2 == 1) ? -1 : 1;
}

ZPoly primitive_negated_remainder(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  const int s = pseudo_remainder(a, b, r);
  // r = lc(b)^steps * rem(a, b): negate unless the scaling already flipped the sign.
  if (s > 0) {
    for (auto& c : r) c = -c;
  }
  make_primitive(r);
  return r;
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() && b.is_zero()) return RationalPoly::zero(a.variable());
  ZPoly u = a.is_zero() ? ZPoly{} : to_integer_poly(a);
  ZPoly v = b.is_zero() ? ZPoly{} : to_integer_poly(b);
  while (!v.empty()) {
    ZPoly r;
    pseudo_remainder(u, v, r);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  RationalPoly g = from_integer_poly(u, a.variable());
  return g * Rational(1 / g.leading());
}

RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  return q;
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p) {
  std::vector<std::pair<RationalPoly, int>> out;
  if (p.degree() <= 0) return out;
  const RationalPoly dp = p.derivative();
  const RationalPoly a0 = gcd(p, dp);
  RationalPoly b = exact_quotient(p, a0);
  RationalPoly c = exact_quotient(dp, a0);
  RationalPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RationalPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
  }
  return out;
}

DoublePoly to_double(const RationalPoly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_d());
  return DoublePoly(std::move(c), p.variable());
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const char var = static_cast<char>(p.variable());
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const Rational mag = neg ? Rational(-c) : c;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace torus
