#include "torus/resultant.hpp"

#include <utility>

namespace torus {

RationalPoly bareiss_determinant(std::vector<std::vector<RationalPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return RationalPoly::constant(1);
  const Variable var = m[0][0].variable();
  bool negate = false;
  RationalPoly prev = RationalPoly::constant(1, var);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return RationalPoly::zero(var);
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = RationalPoly::zero(var);
    }
    prev = m[k][k];
  }
  RationalPoly det = m[n - 1][n - 1];
  det.set_variable(var);
  return negate ? -det : det;
}

namespace {

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// a / b for integer polynomials where the quotient is known to be integral.
ZPoly zdivexact(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  if (b.empty()) throw Error(ErrorKind::IdenticallyZero, "division by the zero polynomial");
  const std::size_t db = b.size() - 1;
  if (a.size() - 1 < db) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  ZPoly q(a.size() - db, mpz_class(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a[i].get_mpz_t(), b.back().get_mpz_t());
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& v : a) {
    if (v != 0) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

ZPoly bareiss_integer(std::vector<std::vector<ZPoly>> m, bool& negate) {
  const std::size_t n = m.size();
  negate = false;
  ZPoly prev{mpz_class(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].empty()) ++swap_with;
      if (swap_with == n) return {};
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = zdivexact(zsub(zmul(m[k][k], m[i][j]), zmul(m[i][k], m[k][j])), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

// Common denominator scale s with s * p integral.
mpz_class denominator_lcm(const BivariatePolynomial& p) {
  mpz_class l = 1;
  for (const auto& [e, v] : p.monomials()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace

RationalPoly resultant(const BivariatePolynomial& p, const BivariatePolynomial& q, Variable eliminate) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::IdenticallyZero, "resultant of a zero polynomial");
  const Variable kept = eliminate == Variable::x ? Variable::y : Variable::x;
  const auto pc = p.as_polynomial_in(eliminate);
  const auto qc = q.as_polynomial_in(eliminate);
  const std::size_t dp = pc.size() - 1;
  const std::size_t dq = qc.size() - 1;
  const std::size_t size = dp + dq;
  if (size == 0) return RationalPoly::constant(1, kept);
  // Work with integer multiples sp*p and sq*q; Res(sp p, sq q) = sp^dq sq^dp Res(p, q).
  const mpz_class sp = denominator_lcm(p), sq = denominator_lcm(q);
  auto integral = [](const RationalPoly& c, const mpz_class& s) {
    ZPoly out;
    for (const auto& v : c.coeffs()) out.push_back(Rational(v * s).get_num());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<std::vector<ZPoly>> m(size, std::vector<ZPoly>(size));
  // Rows hold coefficients from the highest power down.
  for (std::size_t r = 0; r < dq; ++r) {
    for (std::size_t i = 0; i <= dp; ++i) m[r][r + i] = integral(pc[dp - i], sp);
  }
  for (std::size_t r = 0; r < dp; ++r) {
    for (std::size_t i = 0; i <= dq; ++i) m[dq + r][r + i] = integral(qc[dq - i], sq);
  }
  bool negate = false;
  RationalPoly res = from_integer_poly(bareiss_integer(std::move(m), negate), kept);
  mpz_class scale = 1, t;
  mpz_pow_ui(t.get_mpz_t(), sp.get_mpz_t(), dq);
  scale *= t;
  mpz_pow_ui(t.get_mpz_t(), sq.get_mpz_t(), dp);
  scale *= t;
  res *= Rational(negate ? -1 : 1, 1) / Rational(scale);
  if (res.is_zero()) throw Error(ErrorKind::CommonComponent, "resultant vanishes identically: shared factor");
  return res;
}

}  // namespace torus
