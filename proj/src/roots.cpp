#include "torus/roots.hpp"

#include <algorithm>

namespace torus {

namespace {

std::vector<mpz_class> integer_coeffs(const RationalPoly& p) {
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num());
  return out;
}

bool has_integer_coeffs(const RationalPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

// Sign of q^d p(n/q) = sum a_i n^i q^(d-i) by homogeneous Horner; q > 0.
int sign_homogeneous(const std::vector<mpz_class>& a, const Rational& t) {
  if (a.empty()) return 0;
  const mpz_class& num = t.get_num();
  const mpz_class& den = t.get_den();
  mpz_class acc = a.back();
  mpz_class qpow = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    qpow *= den;
    acc *= num;
    acc += a[i] * qpow;
  }
  return sgn(acc);
}

}  // namespace

int sign_eval(const RationalPoly& p, const Rational& t) {
  if (has_integer_coeffs(p)) return sign_homogeneous(integer_coeffs(p), t);
  return sign(p(t));
}

SturmSequence::SturmSequence(const RationalPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(to_integer_poly(p));
  if (p.degree() < 1) return;
  ZPoly next = to_integer_poly(p.derivative());
  while (!next.empty()) {
    chain_.push_back(std::move(next));
    next = primitive_negated_remainder(chain_[chain_.size() - 2], chain_.back());
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_homogeneous(q, t));
  return count_changes(s);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sgn(q.back()));
  return count_changes(s);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.size() % 2 == 1 ? sgn(q.back()) : -sgn(q.back()));
  return count_changes(s);
}

Rational root_bound(const RationalPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

namespace {

// The rational with the smallest denominator in the closed interval [lo, hi]
// (continued-fraction descent); lo <= hi.
Rational simplest_between(Rational lo, Rational hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both ends lie in (fl, fl + 1): recurse on the reciprocals of the fractional parts.
  const Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace

void refine(IsolatedRoot& r, const Rational& width) {
  if (r.exact) {
    r.value = to_double(r.lo);
    return;
  }
  const bool integral = has_integer_coeffs(r.factor);
  const auto ic = integer_coeffs(r.factor);
  auto sgn_at = [&](const Rational& t) { return integral ? sign_homogeneous(ic, t) : sign(r.factor(t)); };
  int s_lo = sgn_at(r.lo);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    const int s = sgn_at(mid);
    if (s == 0) {
      r.lo = r.hi = mid;
      r.exact = true;
      break;
    }
    if (s == s_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  if (!r.exact) {
    // Rational roots with small denominators are pinned exactly.
    const Rational q = simplest_between(r.lo, r.hi);
    if (sgn_at(q) == 0) {
      r.lo = r.hi = q;
      r.exact = true;
    }
  }
  r.value = r.exact ? to_double(r.lo) : to_double((r.lo + r.hi) / 2);
}

namespace {

// Isolates the roots of the square-free f in the open interval (a, b), where
// f(a), f(b) are nonzero and the interval holds `n` roots.
void isolate(const RationalPoly& f, const std::vector<mpz_class>& fi, const SturmSequence& sturm, Rational a, Rational b,
             int n, std::vector<IsolatedRoot>& out) {
  if (n <= 0) return;
  if (n == 1 && sign_homogeneous(fi, a) * sign_homogeneous(fi, b) < 0) {
    IsolatedRoot r;
    r.lo = a;
    r.hi = b;
    r.factor = f;
    out.push_back(std::move(r));
    return;
  }
  Rational m = (a + b) / 2;
  if (sign_homogeneous(fi, m) == 0) {
    IsolatedRoot r;
    r.lo = r.hi = m;
    r.exact = true;
    r.factor = f;
    out.push_back(r);
    // Step away from m until the neighbourhood holds no other root.
    Rational d = (b - a) / 4;
    while (sign_homogeneous(fi, m - d) == 0 || sign_homogeneous(fi, m + d) == 0 || sturm.count(m - d, m + d) != 1) {
      d /= 2;
    }
    const Rational l = m - d;
    const Rational h = m + d;
    isolate(f, fi, sturm, a, l, sturm.count(a, l), out);
    isolate(f, fi, sturm, h, b, sturm.count(h, b), out);
    return;
  }
  isolate(f, fi, sturm, a, m, sturm.count(a, m), out);
  isolate(f, fi, sturm, m, b, sturm.count(m, b), out);
}

std::vector<IsolatedRoot> isolate_interval(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                           const RootOptions& options, bool flag_boundary) {
  if (p.is_zero()) throw Error(ErrorKind::IdenticallyZero, "root isolation of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorKind::InvariantViolation, "root interval requires lo < hi");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  const Rational width = rational_from_double(options.tolerance);
  // Square-free inputs (the usual case) reuse the chain already built.
  SturmSequence whole(p);
  std::vector<std::pair<RationalPoly, int>> factors;
  if (whole.squarefree()) {
    factors.emplace_back(primitive_part(p), 1);
  } else {
    factors = squarefree_decomposition(p);
  }
  for (const auto& [factor, mult] : factors) {
    if (factor.degree() < 1) continue;
    const SturmSequence sturm = whole.squarefree() ? std::move(whole) : SturmSequence(factor);
    // A root sitting exactly on lo or hi is outside the open interval: move
    // that end inward past it without skipping any interior root.
    Rational a = lo;
    Rational b = hi;
    if (factor(lo) == 0) {
      Rational d = (hi - lo) / 4;
      while (factor(lo + d) == 0 || sturm.count(lo, lo + d) != 0) d /= 2;
      a = lo + d;
    }
    if (factor(hi) == 0) {
      Rational d = (hi - lo) / 4;
      while (factor(hi - d) == 0 || sturm.count(hi - d, hi) != 1) d /= 2;
      b = hi - d;
    }
    std::vector<IsolatedRoot> found;
    const int n = sturm.count(a, b);
    isolate(factor, integer_coeffs(factor), sturm, a, b, n, found);
    for (auto& r : found) {
      r.multiplicity = mult;
      refine(r, width);
      const Rational eps = rational_from_double(options.boundary_epsilon);
      if (flag_boundary && (r.lo - lo < eps || hi - r.hi < eps)) r.near_boundary = true;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  // Roots of different square-free factors are distinct; split overlapping brackets.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi >= out[i + 1].lo) {
        const Rational w = std::max(out[i].hi - out[i].lo, out[i + 1].hi - out[i + 1].lo) / 4;
        if (w == 0) continue;  // two exact roots are distinct points
        refine(out[i], w);
        refine(out[i + 1], w);
        again = true;
      }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  }
  return out;
}

}  // namespace

std::vector<IsolatedRoot> real_roots_in_open_interval(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                                      const RootOptions& options) {
  return isolate_interval(p, lo, hi, options, true);
}

std::vector<IsolatedRoot> real_roots(const RationalPoly& p, const RootOptions& options) {
  if (p.is_zero()) throw Error(ErrorKind::IdenticallyZero, "root isolation of the zero polynomial");
  if (p.degree() < 1) return {};
  const Rational b = root_bound(p);
  return isolate_interval(p, -b, b, options, false);
}

int count_distinct_real_roots(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::IdenticallyZero, "root count of the zero polynomial");
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (factor.degree() >= 1) total += SturmSequence(factor).count_all();
  }
  return total;
}

bool vanishes_at(const RationalPoly& q, const IsolatedRoot& r) {
  if (q.is_zero()) return true;
  if (r.exact) return q(r.lo) == 0;
  const RationalPoly g = gcd(r.factor, q);
  if (g.degree() < 1) return false;
  return sign(g(r.lo)) * sign(g(r.hi)) < 0;
}

int sign_at(const RationalPoly& q, const IsolatedRoot& r) {
  if (r.exact) return sign(q(r.lo));
  if (vanishes_at(q, r)) return 0;
  // Shrink the bracket until q has no root in it; q keeps one sign there.
  const RationalPoly qs = exact_quotient(q, gcd(q, q.derivative()));
  const SturmSequence sturm(qs);
  IsolatedRoot narrow = r;
  while (qs(narrow.lo) == 0 || qs(narrow.hi) == 0 || sturm.count(narrow.lo, narrow.hi) != 0) {
    refine(narrow, (narrow.hi - narrow.lo) / 2);
    if (narrow.exact) return sign(q(narrow.lo));
  }
  return sign(q(narrow.lo));
}

int compare(const Rational& c, const IsolatedRoot& r) {
  if (r.exact) return sign(c - r.lo);
  if (c <= r.lo) return -1;
  if (c >= r.hi) return 1;
  const int s = sign(r.factor(c));
  if (s == 0) return 0;
  return s == sign(r.factor(r.lo)) ? -1 : 1;
}

}  // namespace torus
