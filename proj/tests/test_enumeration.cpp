#include <functional>
#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "torus/enumeration.hpp"
#include "torus/quadratic.hpp"

using namespace torus;
using test_support::random_h;
using test_support::random_rational;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

// Grid oracle: cells of an n x n lattice on (0,1)^2 where both closing
// surfaces change sign and Newton from the cell centre converges inside it.
int grid_common_zeros(const BivariatePolynomial& h, int n) {
  const FloatBivariate f(h);
  auto F1 = [&](double x, double y) { return f.value(0, y) - f.value(x, 1); };
  auto F2 = [&](double x, double y) { return f.value(x, 0) - f.value(1, y); };
  int found = 0;
  const double s = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x0 = i * s, y0 = j * s;
      auto changes = [&](auto F) {
        const double c[4] = {F(x0, y0), F(x0 + s, y0), F(x0, y0 + s), F(x0 + s, y0 + s)};
        bool pos = false, neg = false;
        for (double v : c) {
          pos = pos || v >= 0;
          neg = neg || v <= 0;
        }
        return pos && neg;
      };
      if (!changes(F1) || !changes(F2)) continue;
      double x = x0 + s / 2, y = y0 + s / 2;
      const double e = 1e-7;
      for (int it = 0; it < 30; ++it) {
        const double a = F1(x, y), b = F2(x, y);
        const double a11 = (F1(x + e, y) - F1(x - e, y)) / (2 * e), a12 = (F1(x, y + e) - F1(x, y - e)) / (2 * e);
        const double a21 = (F2(x + e, y) - F2(x - e, y)) / (2 * e), a22 = (F2(x, y + e) - F2(x, y - e)) / (2 * e);
        const double det = a11 * a22 - a12 * a21;
        if (det == 0) break;
        x -= (a * a22 - b * a12) / det;
        y -= (b * a11 - a * a21) / det;
      }
      if (std::abs(F1(x, y)) < 1e-10 && std::abs(F2(x, y)) < 1e-10 && x > x0 - s && x < x0 + 2 * s && y > y0 - s &&
          y < y0 + 2 * s && x > 0 && x < 1 && y > 0 && y < 1) {
        ++found;
      }
    }
  }
  return found;
}

}  // namespace

TEST_CASE("enumerate_bb on quadratic forms") {
  auto r = enumerate_bb(quadratic_form(1, 2, -1));
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.candidates[0].x_root->exact);
  CHECK(r.bound == 1);
  CHECK(enumerate_bb(quadratic_form(1, 0, 1)).candidates.empty());
  CHECK(kind_of([] { enumerate_bb(BivariatePolynomial::monomial(1, 2, 0)); }) == ErrorKind::DegenerateContinuum);
  CHECK(kind_of([] { enumerate_bb(quadratic_form(1, 2, -1) + BivariatePolynomial::constant(1)); }) ==
        ErrorKind::ConstantTermNonzero);
  CHECK(kind_of([] { enumerate_aba(quadratic_form(1, 2, -1) + BivariatePolynomial::constant(1)); }) ==
        ErrorKind::ConstantTermNonzero);
}

TEST_CASE("enumerate_bb on the vertical-lines family") {
  const auto r = enumerate_bb(vertical_lines_family(5));
  REQUIRE(r.candidates.size() == 4);
  for (int k = 1; k <= 4; ++k) {
    const auto& c = r.candidates[static_cast<std::size_t>(k - 1)];
    CHECK(c.x_root->lo == fraction(k, 5));
    CHECK(c.x_root->exact);
    CHECK(c.filters.passed());
    CHECK(c.levels[0] == doctest::Approx(std::pow(k / 5.0, 5)));
  }
  // bb seam points are partners under the gluing.
  for (const auto& c : r.candidates) {
    const auto s = c.seam_points();
    CHECK(s[0].partner() == s[1]);
  }
}

TEST_CASE("aa mirrors bb under x <-> y") {
  std::mt19937_64 rng(12);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto h = random_h(rng, 2 + trial % 4);
    EnumerationResult aa, bb;
    try {
      aa = enumerate_aa(h);
    } catch (const Error& e) {
      CHECK(kind_of([&] { enumerate_bb(h.swapped()); }) == e.kind());
      continue;
    }
    bb = enumerate_bb(h.swapped());
    REQUIRE(aa.candidates.size() == bb.candidates.size());
    for (std::size_t i = 0; i < aa.candidates.size(); ++i) {
      CHECK(std::abs(aa.candidates[i].y - bb.candidates[i].x) <= 1e-12);
      CHECK(std::abs(aa.candidates[i].levels[0] - bb.candidates[i].levels[0]) <= 1e-12);
      CHECK(aa.candidates[i].filters.transversal == bb.candidates[i].filters.transversal);
      CHECK(aa.candidates[i].filters.sewing == bb.candidates[i].filters.sewing);
    }
    nonempty += !aa.candidates.empty();
  }
  CHECK(nonempty > 10);
}

TEST_CASE("enumerate_aba on the cubic example") {
  const auto r = enumerate_aba(six_aba_cubic());
  CHECK(r.bound == 6);
  REQUIRE(r.candidates.size() == 6);
  const auto& published = test_support::six_aba_published();
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(r.candidates[i].x - published[i].x) <= 5e-3);
    CHECK(std::abs(r.candidates[i].y - published[i].y) <= 5e-3);
    CHECK(r.candidates[i].filters.passed());
    CHECK(r.candidates[i].filters.sewing);
    CHECK(r.candidates[i].residual <= 1e-10);
  }
  CHECK_FALSE(r.points_at_infinity);
}

TEST_CASE("enumerate_aba small cases") {
  const auto xy = BivariatePolynomial::monomial(1, 1, 1);
  CHECK(enumerate_aba(xy).candidates.empty());
  // bab: H(0,y) = H(x,0) = 0 holds everywhere, so the curves share a component.
  CHECK(kind_of([&] { enumerate_bab(xy); }) == ErrorKind::CommonComponent);
  CHECK(enumerate_aba(quadratic_form(1, 0, 1)).candidates.empty());
}

TEST_CASE("negative radicand means no aba solution, confirmed on a grid") {
  std::mt19937_64 rng(13);
  int tested = 0;
  while (tested < 12) {
    const Rational a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4), c = random_rational(rng, 9, 4);
    if (b == 0 || a == c) continue;
    const auto q = quadratic_aba_analyze(a, b, c);
    if (!q.complex) continue;
    const auto h = quadratic_form(a, b, c);
    CHECK(enumerate_aba(h).candidates.empty());
    CHECK(grid_common_zeros(h, 400) == 0);
    ++tested;
  }
}

TEST_CASE("bounds hold on random inputs") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const auto h = random_h(rng, n);
    for (CycleType t : {CycleType::bb, CycleType::aa, CycleType::aba, CycleType::bab}) {
      try {
        const auto r = enumerate(h, t);
        CHECK(static_cast<int>(r.candidates.size()) <= theoretical_bound(t, n));
        for (const auto& c : r.candidates) {
          CHECK(c.x >= 0);
          CHECK(c.y >= 0);
          if (c.filters.interior) CHECK(c.residual <= 1e-10 * 10);
        }
      } catch (const Error& e) {
        CHECK(e.kind() != ErrorKind::BoundViolation);
      }
    }
  }
}

TEST_CASE("closing residuals of emitted candidates") {
  std::mt19937_64 rng(15);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = random_h(rng, 2 + trial % 3, 5, 3);
    for (CycleType t : {CycleType::bb, CycleType::aba, CycleType::bab}) {
      EnumerationResult r;
      try {
        r = enumerate(h, t);
      } catch (const Error&) {
        continue;
      }
      for (const auto& c : r.candidates) {
        CHECK(c.filters.closing_residual);
        CHECK(c.residual <= 1e-10 * 5);
        ++seen;
      }
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("exact mode pins rational seams and decides tangency exactly") {
  EnumerationOptions exact;
  exact.mode = ArithmeticMode::exact;
  for (int n = 2; n <= 8; ++n) {
    const auto r = enumerate_bb(vertical_lines_family(n), exact);
    REQUIRE(static_cast<int>(r.candidates.size()) == n - 1);
    for (int k = 1; k < n; ++k) CHECK(r.candidates[static_cast<std::size_t>(k - 1)].x_root->lo == fraction(k, n));
  }
  // (1/3, 1) is a critical point for n = 3.
  const auto r3 = enumerate_bb(vertical_lines_family(3), exact);
  CHECK_FALSE(r3.candidates[0].filters.transversal);
  CHECK(r3.candidates[1].filters.transversal);
  // Exact and float modes agree on the cubic example.
  const auto re = enumerate_aba(six_aba_cubic(), exact);
  const auto rf = enumerate_aba(six_aba_cubic());
  REQUIRE(re.candidates.size() == rf.candidates.size());
  for (std::size_t i = 0; i < re.candidates.size(); ++i) {
    CHECK(re.candidates[i].filters.transversal == rf.candidates[i].filters.transversal);
    CHECK(re.candidates[i].filters.sewing == rf.candidates[i].filters.sewing);
  }
}

TEST_CASE("continuum detection") {
  // H = x^2 - x y + ... with H(0,y) = H(x,1) identically is hard to build; use
  // a quadratic whose aba equations share a line: H = x^2 - y^2 gives
  // P = -y^2 - x^2 + 1 and Q~ = -1 + 1 = 0.
  const auto h = quadratic_form(1, 0, -1);
  CHECK(kind_of([&] { enumerate_aba(h); }) == ErrorKind::CommonComponent);
}

TEST_CASE("quadratic_bb_conditions") {
  const auto v = quadratic_bb_conditions(1, 2, -1);
  CHECK(v.cond_a);
  // (ac - b^2)(a + b - c)/b = (-1 - 4)(1 + 2 + 1)/2 = -10 <= 0
  CHECK(v.cond_b);
  CHECK(v.cond_c);  // ac = -1 < 0
  // delta = 16 + 16 - 4 = 28 >= 0 and a(b - c)(b^2 + ab - ac) = 3 * 7 > 0
  CHECK(v.delta == 28);
  CHECK(v.cond_d);
  CHECK(v.exists);
  CHECK(*v.x0 == fraction(1, 2));
  CHECK(*v.level == fraction(1, 4));

  const auto w = quadratic_bb_conditions(1, 0, 1);
  CHECK_FALSE(w.cond_a);
  CHECK_FALSE(w.exists);
  CHECK_FALSE(w.x0.has_value());
  CHECK_THROWS_AS(quadratic_bb_conditions(0, 0, 0), Error);
}

TEST_CASE("radicand identity and discriminant sign") {
  // Expand b^4 - 8ab^2c + 4ac(a+c)^2 as a polynomial in c over Q[a,b].
  using Coeffs = std::vector<BivariatePolynomial>;
  const auto A = BivariatePolynomial::monomial(1, 1, 0);
  const auto B = BivariatePolynomial::monomial(1, 0, 1);
  const auto one = BivariatePolynomial::constant(1);
  auto mul = [](const Coeffs& p, const Coeffs& q) {
    Coeffs r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
    return r;
  };
  auto add = [](Coeffs p, const Coeffs& q) {
    if (q.size() > p.size()) p.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) p[i] = p[i] + q[i];
    return p;
  };
  const Coeffs a_plus_c{A, one};
  Coeffs radicand = add(Coeffs{B * B * B * B}, Coeffs{BivariatePolynomial(), Rational(-8) * (A * B * B)});
  radicand = add(radicand, mul(mul(Coeffs{BivariatePolynomial(), Rational(4) * A}, a_plus_c), a_plus_c));
  const auto pc = symbolic_pc();
  REQUIRE(radicand.size() == pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) CHECK(radicand[i] == pc[i]);

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a = random_rational(rng, 12, 5), b = random_rational(rng, 12, 5);
    if (a == 0 || b == 0 || a == 1) continue;
    const auto q = quadratic_aba_analyze(a, b, 1);
    const int count = count_distinct_real_roots(q.Pc);
    if (q.delta_P > 0) CHECK(count == 3);
    if (q.delta_P < 0) CHECK(count == 1);
    if (q.delta_P == 0) CHECK(count < 3);
  }
  // 2a = b gives a repeated root.
  const auto q = quadratic_aba_analyze(1, 2, 0);
  CHECK(q.delta_P == 0);
  CHECK(count_distinct_real_roots(q.Pc) < 3);
}

TEST_CASE("closed-form aba pairs: Q^2 and interiority") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4), c = random_rational(rng, 9, 4);
    if (b == 0 || a == c) continue;
    const auto q = quadratic_aba_analyze(a, b, c);
    CHECK(q.radicand == q.Pc(c));
    if (q.complex) {
      CHECK(q.solutions.empty());
      continue;
    }
    CHECK(q.Q * q.Q == doctest::Approx(to_double(q.radicand)));
    const auto h = quadratic_form(a, b, c);
    for (const auto& p : q.solutions) {
      const double r1 = h.evaluate(0.0, p.y) - h.evaluate(p.x, 1.0);
      const double r2 = h.evaluate(p.x, 0.0) - h.evaluate(1.0, p.y);
      CHECK(std::abs(r1) < 1e-9);
      CHECK(std::abs(r2) < 1e-9);
      CHECK(p.interior == (p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1));
    }
  }
  CHECK_THROWS_AS(quadratic_aba_analyze(1, 0, 2), Error);
  CHECK_THROWS_AS(quadratic_aba_analyze(1, 3, 1), Error);
}

TEST_CASE("closed-form pairs match enumerate_aba") {
  std::mt19937_64 rng(18);
  int matched = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Rational a = random_rational(rng, 9, 4), b = random_rational(rng, 9, 4), c = random_rational(rng, 9, 4);
    if (b == 0 || a == c) continue;
    const auto q = quadratic_aba_analyze(a, b, c);
    const auto e = enumerate_aba(quadratic_form(a, b, c));
    if (q.complex) {
      CHECK(e.candidates.empty());
      continue;
    }
    std::size_t interior = 0;
    for (const auto& p : q.solutions) {
      if (!p.interior) continue;
      ++interior;
      bool found = false;
      for (const auto& cand : e.candidates) {
        found = found || (std::abs(cand.x - p.x) <= 1e-10 && std::abs(cand.y - p.y) <= 1e-10);
      }
      CHECK(found);
      ++matched;
    }
    CHECK(e.candidates.size() == interior);
  }
  CHECK(matched > 10);
}

TEST_CASE("aba clause identification examples") {
  // a = 1, b = 1: case a > 0 (b); c at the midpoint of [rho_1, U).
  {
    const Rational a(1), b(1);
    const auto q = quadratic_aba_analyze(a, b, 0);
    REQUIRE(!q.rho.empty());
    const double upper = (-2.0 - std::sqrt(8.0)) / 2;
    const Rational c = rational_from_double((q.rho[0].value + upper) / 2);
    const auto region = quadratic_aba_region(a, b, c);
    CHECK(region.clause == AbaClause::case2_b);
    CHECK(region.exists);
    const auto at = quadratic_aba_analyze(a, b, c);
    CHECK(at.exists);
    for (const auto& p : at.solutions) CHECK(p.interior);
  }
  // a = -1, b = -1/2: case a < 0 (b); c at the midpoint of (L, rho_3].
  {
    const Rational a(-1), b = fraction(-1, 2);
    const auto q = quadratic_aba_analyze(a, b, 0);
    REQUIRE(q.rho.size() == 3);
    const double lower = 0.75 + std::sqrt(3.25) / 2;
    const Rational c = rational_from_double((lower + q.rho[2].value) / 2);
    const auto region = quadratic_aba_region(a, b, c);
    CHECK(region.clause == AbaClause::case1_b);
    CHECK(region.exists);
    CHECK(quadratic_aba_analyze(a, b, c).exists);
  }
  // a = 1, b = -2 lies outside every b-range of the a > 0 case.
  CHECK(quadratic_aba_region(1, -2, 5).clause == AbaClause::none);
  CHECK_FALSE(quadratic_aba_region(1, -2, 5).exists);
}

TEST_CASE("sign_plus_sqrt") {
  CHECK(sign_plus_sqrt(1, -1, 4) == -1);
  CHECK(sign_plus_sqrt(2, -1, 4) == 0);
  CHECK(sign_plus_sqrt(3, -1, 4) == 1);
  CHECK(sign_plus_sqrt(-3, 1, 4) == -1);
  CHECK(sign_plus_sqrt(0, 1, 0) == 0);
}
