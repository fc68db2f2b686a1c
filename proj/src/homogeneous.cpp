#include "torus/homogeneous.hpp"

#include <sstream>

namespace torus {

void HomogeneousPolynomial::add(const Rational& value, int ex, int ey, int ez) {
  if (ex + ey + ez != degree_) throw Error(ErrorKind::InvariantViolation, "monomial degree differs from form degree");
  if (value == 0) return;
  auto& slot = coeffs_[{ex, ey, ez}];
  slot += value;
  if (slot == 0) coeffs_.erase({ex, ey, ez});
}

Rational HomogeneousPolynomial::coefficient(int ex, int ey, int ez) const {
  auto it = coeffs_.find({ex, ey, ez});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational HomogeneousPolynomial::evaluate(const Rational& X, const Rational& Y, const Rational& Z) const {
  Rational acc(0);
  for (const auto& [e, v] : coeffs_) {
    Rational term = v;
    for (int i = 0; i < e[0]; ++i) term *= X;
    for (int i = 0; i < e[1]; ++i) term *= Y;
    for (int i = 0; i < e[2]; ++i) term *= Z;
    acc += term;
  }
  return acc;
}

std::string HomogeneousPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, v] = *it;
    os << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
    const Rational mag = abs(v);
    const bool unit = mag == 1 && degree_ > 0;
    if (!unit) os << torus::to_string(mag);
    bool lead = unit;
    const char names[3] = {'X', 'Y', 'Z'};
    for (int i = 0; i < 3; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      if (!lead) os << "*";
      os << names[i];
      if (e[static_cast<std::size_t>(i)] > 1) os << "^" << e[static_cast<std::size_t>(i)];
      lead = false;
    }
    first = false;
  }
  return os.str();
}

HomogeneousPolynomial homogenize(const BivariatePolynomial& p, int target_degree) {
  if (target_degree < p.degree()) {
    throw Error(ErrorKind::DegreeTooSmall, "target degree " + std::to_string(target_degree) + " below degree " +
                                               std::to_string(p.degree()));
  }
  HomogeneousPolynomial h(target_degree);
  for (const auto& [e, v] : p.monomials()) h.add(v, e.first, e.second, target_degree - e.first - e.second);
  return h;
}

BivariatePolynomial dehomogenize(const HomogeneousPolynomial& h) {
  BivariatePolynomial p;
  for (const auto& [e, v] : h.monomials()) p.add_monomial(v, e[0], e[1]);
  return p;
}

std::vector<Rational> at_infinity(const HomogeneousPolynomial& h) {
  std::vector<Rational> f(static_cast<std::size_t>(h.degree()) + 1, Rational(0));
  for (const auto& [e, v] : h.monomials()) {
    if (e[2] == 0) f[static_cast<std::size_t>(e[1])] = v;
  }
  return f;
}

bool share_point_at_infinity(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  auto zero = [](const std::vector<Rational>& v) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  };
  if (zero(f) || zero(g)) return true;
  // The point (0:1) is a zero iff the pure Y^d coefficient vanishes.
  if (f.back() == 0 && g.back() == 0) return true;
  // Remaining points are (1:t); common complex t <=> nontrivial gcd.
  const RationalPoly ft(f, Variable::y);
  const RationalPoly gt(g, Variable::y);
  return gcd(ft, gt).degree() >= 1;
}

}  // namespace torus
