#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "torus/error.hpp"
#include "torus/rational.hpp"

namespace torus {

enum class Variable : char { x = 'x', y = 'y', c = 'c' };

// Dense univariate polynomial, coefficients lowest degree first. Trailing
// zeros are stripped exactly, so the zero polynomial has no coefficients and
// degree -1.
template <class Scalar>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Scalar> coeffs, Variable var = Variable::x)
      : c_(std::move(coeffs)), var_(var) {
    trim();
  }
  Univariate(std::initializer_list<Scalar> coeffs, Variable var = Variable::x)
      : c_(coeffs), var_(var) {
    trim();
  }

  static Univariate zero(Variable var = Variable::x) { return Univariate(std::vector<Scalar>{}, var); }
  static Univariate constant(const Scalar& value, Variable var = Variable::x) {
    return Univariate(std::vector<Scalar>{value}, var);
  }
  static Univariate monomial(const Scalar& value, int power, Variable var = Variable::x) {
    std::vector<Scalar> c(static_cast<std::size_t>(power) + 1, Scalar(0));
    c.back() = value;
    return Univariate(std::move(c), var);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Variable variable() const { return var_; }
  void set_variable(Variable v) { var_ = v; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& at) const { return evaluate<Scalar>(at); }
  Scalar operator()(int at) const { return evaluate<Scalar>(Scalar(at)); }
  double operator()(double at) const
    requires(!std::is_same_v<Scalar, double>)
  {
    return evaluate<double>(at);
  }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + to_scalar<T>(*it);
    return acc;
  }

  Univariate derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return Univariate(std::move(d), var_);
  }

  Univariate& operator+=(const Univariate& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Univariate& operator-=(const Univariate& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Univariate& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Univariate operator+(Univariate a, const Univariate& b) { return a += b; }
  friend Univariate operator-(Univariate a, const Univariate& b) { return a -= b; }
  friend Univariate operator-(Univariate a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Univariate operator*(Univariate a, const Scalar& s) { return a *= s; }
  friend Univariate operator*(const Scalar& s, Univariate a) { return a *= s; }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.var_);
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Univariate(std::move(r), a.var_);
  }
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

  // p(s * t) for a scalar s; used to rescale variables.
  Univariate scaled_argument(const Scalar& s) const {
    std::vector<Scalar> r = c_;
    Scalar f(1);
    for (auto& v : r) {
      v *= f;
      f *= s;
    }
    return Univariate(std::move(r), var_);
  }

  // p(t + s)
  Univariate shifted(const Scalar& s) const {
    Univariate result = zero(var_);
    const Univariate lin({s, Scalar(1)}, var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + constant(*it, var_);
    return result;
  }

 private:
  template <class T>
  static T to_scalar(const Scalar& v) {
    if constexpr (std::is_same_v<T, double> && !std::is_same_v<Scalar, double>) {
      return v.get_d();
    } else {
      return T(v);
    }
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
  Variable var_ = Variable::x;
};

using RationalPoly = Univariate<Rational>;
using DoublePoly = Univariate<double>;

// Euclidean division over a field. Throws IdenticallyZero for a zero divisor.
template <class Scalar>
std::pair<Univariate<Scalar>, Univariate<Scalar>> divmod(const Univariate<Scalar>& a,
                                                          const Univariate<Scalar>& b) {
  if (b.is_zero()) throw Error(ErrorKind::IdenticallyZero, "division by the zero polynomial");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Univariate<Scalar>::zero(a.variable()), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Univariate<Scalar>(std::move(quot), a.variable()), Univariate<Scalar>(std::move(rem), a.variable())};
}

// Scales by a positive rational so the coefficients are coprime integers.
// Signs (and therefore Sturm counts) are unchanged.
RationalPoly primitive_part(const RationalPoly& p);

// Integer-coefficient polynomial, lowest degree first.
using ZPoly = std::vector<mpz_class>;

// Primitive integer multiple (positive factor) of p.
ZPoly to_integer_poly(const RationalPoly& p);
RationalPoly from_integer_poly(const ZPoly& p, Variable var = Variable::x);

// r = lc(b)^s * (a mod b) for the number of reduction steps s; returns the
// sign of lc(b)^s.
int pseudo_remainder(const ZPoly& a, const ZPoly& b, ZPoly& r);

// Positive multiple of -(a mod b) with coprime integer coefficients.
ZPoly primitive_negated_remainder(const ZPoly& a, const ZPoly& b);

// Monic gcd over Q (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

// Exact quotient a / b; throws InvariantViolation when the remainder is nonzero.
RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b);

// Yun's square-free factorization: p = lc * prod_i factors[i].first ^ factors[i].second
// with pairwise coprime, square-free, primitive factors.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p);

DoublePoly to_double(const RationalPoly& p);

std::string to_string(const RationalPoly& p);

}  // namespace torus
