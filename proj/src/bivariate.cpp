#include "torus/bivariate.hpp"

#include <algorithm>
#include <sstream>

namespace torus {

const char* to_string(Edge e) {
  switch (e) {
    case Edge::bottom: return "bottom";
    case Edge::top: return "top";
    case Edge::left: return "left";
    case Edge::right: return "right";
  }
  return "?";
}

BivariatePolynomial BivariatePolynomial::from_terms(const std::vector<Term>& terms) {
  BivariatePolynomial p;
  for (const auto& t : terms) {
    if (t.k < 0 || t.j < 0 || t.j > t.k) {
      throw Error(ErrorKind::InvariantViolation,
                  "term (k=" + std::to_string(t.k) + ", j=" + std::to_string(t.j) + ") violates 0 <= j <= k");
    }
    p.add_monomial(t.value, t.k - t.j, t.j);
  }
  return p;
}

BivariatePolynomial BivariatePolynomial::from_univariate(const RationalPoly& p, Variable as) {
  BivariatePolynomial r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (as == Variable::y) {
      r.add_monomial(p.coeff(i), 0, i);
    } else {
      r.add_monomial(p.coeff(i), i, 0);
    }
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& value) { return monomial(value, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const Rational& value, int px, int py) {
  BivariatePolynomial r;
  r.add_monomial(value, px, py);
  return r;
}

void BivariatePolynomial::add_monomial(const Rational& value, int px, int py) {
  if (value == 0) return;
  auto key = std::make_pair(px, py);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second == 0) coeffs_.erase(it);
}

Rational BivariatePolynomial::coefficient(int px, int py) const {
  auto it = coeffs_.find({px, py});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::degree() const {
  int d = 0;
  for (const auto& [e, v] : coeffs_) d = std::max(d, e.first + e.second);
  return d;
}

int BivariatePolynomial::degree_in(Variable v) const {
  int d = 0;
  for (const auto& [e, c] : coeffs_) d = std::max(d, v == Variable::y ? e.second : e.first);
  return d;
}

std::vector<Term> BivariatePolynomial::terms() const {
  std::vector<Term> out;
  for (const auto& [e, v] : coeffs_) out.push_back({e.first + e.second, e.second, v});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return a.k != b.k ? a.k < b.k : a.j < b.j;
  });
  return out;
}

namespace {

template <class T>
std::vector<T> powers(const T& base, int n) {
  std::vector<T> p(static_cast<std::size_t>(n) + 1, T(1));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * base;
  return p;
}

}  // namespace

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  const auto px = powers(x, degree_in(Variable::x));
  const auto py = powers(y, degree_in(Variable::y));
  Rational acc(0);
  for (const auto& [e, v] : coeffs_) {
    acc += v * px[static_cast<std::size_t>(e.first)] * py[static_cast<std::size_t>(e.second)];
  }
  return acc;
}

double BivariatePolynomial::evaluate(double x, double y) const {
  const auto px = powers(x, degree_in(Variable::x));
  const auto py = powers(y, degree_in(Variable::y));
  double acc = 0.0;
  for (const auto& [e, v] : coeffs_) {
    acc += v.get_d() * px[static_cast<std::size_t>(e.first)] * py[static_cast<std::size_t>(e.second)];
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial r;
  for (const auto& [e, v] : coeffs_) {
    if (e.first > 0) r.add_monomial(v * e.first, e.first - 1, e.second);
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::partial_y() const {
  BivariatePolynomial r;
  for (const auto& [e, v] : coeffs_) {
    if (e.second > 0) r.add_monomial(v * e.second, e.first, e.second - 1);
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial r;
  for (const auto& [e, v] : coeffs_) r.add_monomial(v, e.second, e.first);
  return r;
}

BivariatePolynomial BivariatePolynomial::affine_in_x(const Rational& s, const Rational& t) const {
  BivariatePolynomial r;
  for (int py = 0; py <= degree_in(Variable::y); ++py) {
    std::vector<Rational> col;
    for (const auto& [e, v] : coeffs_) {
      if (e.second != py) continue;
      if (col.size() <= static_cast<std::size_t>(e.first)) col.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
      col[static_cast<std::size_t>(e.first)] = v;
    }
    // p(s*x + t) = q(x + t/s) with q(x) = p(s*x).
    const RationalPoly mapped = RationalPoly(col).scaled_argument(s).shifted(t / s);
    for (int i = 0; i <= mapped.degree(); ++i) r.add_monomial(mapped.coeff(i), i, py);
  }
  return r;
}

RationalPoly BivariatePolynomial::at_y(const Rational& y0) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree_in(Variable::x)) + 1, Rational(0));
  const auto py = powers(y0, degree_in(Variable::y));
  for (const auto& [e, v] : coeffs_) c[static_cast<std::size_t>(e.first)] += v * py[static_cast<std::size_t>(e.second)];
  return RationalPoly(std::move(c), Variable::x);
}

RationalPoly BivariatePolynomial::at_x(const Rational& x0) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree_in(Variable::y)) + 1, Rational(0));
  const auto px = powers(x0, degree_in(Variable::x));
  for (const auto& [e, v] : coeffs_) c[static_cast<std::size_t>(e.second)] += v * px[static_cast<std::size_t>(e.first)];
  return RationalPoly(std::move(c), Variable::y);
}

std::vector<RationalPoly> BivariatePolynomial::as_polynomial_in(Variable v) const {
  const Variable other = v == Variable::x ? Variable::y : Variable::x;
  const int d = degree_in(v);
  std::vector<std::vector<Rational>> tables(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : coeffs_) {
    const int main = v == Variable::x ? e.first : e.second;
    const int rest = v == Variable::x ? e.second : e.first;
    auto& t = tables[static_cast<std::size_t>(main)];
    if (t.size() <= static_cast<std::size_t>(rest)) t.resize(static_cast<std::size_t>(rest) + 1, Rational(0));
    t[static_cast<std::size_t>(rest)] = c;
  }
  std::vector<RationalPoly> out;
  for (auto& t : tables) out.emplace_back(std::move(t), other);
  return out;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r = a;
  for (const auto& [e, v] : b.coeffs_) r.add_monomial(v, e.first, e.second);
  return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& a) {
  BivariatePolynomial r;
  for (const auto& [e, v] : a.coeffs_) r.add_monomial(-v, e.first, e.second);
  return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a + (-b); }

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, va] : a.coeffs_) {
    for (const auto& [eb, vb] : b.coeffs_) r.add_monomial(va * vb, ea.first + eb.first, ea.second + eb.second);
  }
  return r;
}

BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a) {
  BivariatePolynomial r;
  for (const auto& [e, v] : a.coeffs_) r.add_monomial(s * v, e.first, e.second);
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Rational v = it->value;
    const int px = it->k - it->j;
    const int py = it->j;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    v = abs(v);
    const bool unit = (v == 1) && (px + py > 0);
    if (!unit) os << torus::to_string(v);
    auto var = [&](char name, int p, bool lead) {
      if (p == 0) return;
      if (!lead) os << "*";
      os << name;
      if (p > 1) os << "^" << p;
    };
    var('x', px, unit);
    var('y', py, unit && px == 0);
    first = false;
  }
  return os.str();
}

RationalPoly restrict_to_edge(const BivariatePolynomial& p, Edge edge) {
  switch (edge) {
    case Edge::bottom: return p.at_y(0);
    case Edge::top: return p.at_y(1);
    case Edge::left: return p.at_x(0);
    case Edge::right: return p.at_x(1);
  }
  return RationalPoly::zero();
}

RationalPoly closing_difference(const BivariatePolynomial& p, Direction direction) {
  const int n = p.degree();
  RationalPoly d = direction == Direction::vertical
                       ? restrict_to_edge(p, Edge::bottom) - restrict_to_edge(p, Edge::top)
                       : restrict_to_edge(p, Edge::left) - restrict_to_edge(p, Edge::right);
  if (n >= 1 && d.degree() > n - 1) {
    throw Error(ErrorKind::InvariantViolation, "closing difference kept a degree-n term");
  }
  return d;
}

std::pair<BivariatePolynomial, BivariatePolynomial> gradient(const BivariatePolynomial& p) {
  return {p.partial_x(), p.partial_y()};
}

FloatBivariate::FloatBivariate(const BivariatePolynomial& p)
    : value_(table(p)),
      dx_(table(p.partial_x())),
      dy_(table(p.partial_y())),
      dxx_(table(p.partial_x().partial_x())),
      dxy_(table(p.partial_x().partial_y())),
      dyy_(table(p.partial_y().partial_y())) {}

FloatBivariate::Table FloatBivariate::table(const BivariatePolynomial& p) {
  Table t(static_cast<std::size_t>(p.degree_in(Variable::x)) + 1,
          std::vector<double>(static_cast<std::size_t>(p.degree_in(Variable::y)) + 1, 0.0));
  for (const auto& [e, v] : p.monomials()) t[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(e.second)] = v.get_d();
  return t;
}

double FloatBivariate::eval(const Table& t, double x, double y) {
  double acc = 0.0;
  for (auto row = t.rbegin(); row != t.rend(); ++row) {
    double inner = 0.0;
    for (auto c = row->rbegin(); c != row->rend(); ++c) inner = inner * y + *c;
    acc = acc * x + inner;
  }
  return acc;
}

}  // namespace torus
