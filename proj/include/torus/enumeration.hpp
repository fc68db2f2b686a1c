#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/bivariate.hpp"
#include "torus/geometry.hpp"
#include "torus/roots.hpp"

namespace torus {

enum class CycleType { aa, bb, aba, bab };

const char* to_string(CycleType t);

enum class ArithmeticMode { exact, floating };

const char* to_string(ArithmeticMode m);

struct EnumerationOptions {
  ArithmeticMode mode = ArithmeticMode::floating;
  double tangency_tol = 1e-10;
  double root_tolerance = 1e-12;
  double boundary_epsilon = 1e-9;
  // Joint residual for accepting an (x, y) pairing, relative to max(1, max|a_kj|).
  double pairing_tol = 1e-9;
  // Closing-equation residual in float mode.
  double closing_tol = 1e-10;
  // Level pairs closer than this count as equal.
  double level_gap_tol = 1e-12;
};

struct CandidateFilters {
  bool interior = false;
  bool closing_residual = false;
  bool transversal = false;
  bool nondegenerate = false;
  bool distinct_level = false;
  // All seam points are sewing-class (reported, not a filter).
  bool sewing = false;
  // Set by cycle verification.
  std::optional<bool> verified;

  bool passed() const { return interior && closing_residual && transversal && nondegenerate && distinct_level; }
};

// A solution of the closing equations of one cycle type.
//   bb:  seam x, seam points (x,0) and (x,1), level H(x,0).
//   aa:  seam y, seam points (0,y) and (1,y), level H(0,y).
//   aba: seam (x,y); arcs (0,y)->(x,1) at level H(0,y) and (x,0)->(1,y) at level H(x,0).
//   bab: seam (x,y); arcs (0,y)->(x,0) at level H(0,y) and (x,1)->(1,y) at level H(x,1).
struct CycleCandidate {
  CycleType type = CycleType::bb;
  double x = 0.0;
  double y = 0.0;
  std::optional<IsolatedRoot> x_root;
  std::optional<IsolatedRoot> y_root;
  std::vector<double> levels;
  int multiplicity = 1;
  bool near_boundary = false;
  double residual = 0.0;
  // |det| of the closing-system Jacobian relative to its row norms (aba/bab).
  double jacobian_condition = 1.0;
  CandidateFilters filters;

  // Seam points p1=(0,y), p2=(x,1), p3=(x,0), p4=(1,y) as applicable.
  std::vector<EdgePoint> seam_points() const;
};

struct EnumerationResult {
  CycleType type = CycleType::bb;
  int degree = 0;
  int bound = 0;
  std::vector<CycleCandidate> candidates;
  // The closing polynomial (bb/aa) or the resultant in y (aba/bab).
  RationalPoly eliminant;
  // aba/bab: the homogenized closing curves meet on the line at infinity.
  bool points_at_infinity = false;
  // Smallest pairwise level gap among candidates (infinity if fewer than two).
  double min_level_gap = 0.0;
};

// Throws ConstantTermNonzero, DegenerateContinuum (closing difference is 0)
// and BoundViolation (more than n-1 roots, which cannot happen).
EnumerationResult enumerate_bb(const BivariatePolynomial& h, const EnumerationOptions& options = {});
EnumerationResult enumerate_aa(const BivariatePolynomial& h, const EnumerationOptions& options = {});

// Throws ConstantTermNonzero, CommonComponent and BoundViolation.
EnumerationResult enumerate_aba(const BivariatePolynomial& h, const EnumerationOptions& options = {});
EnumerationResult enumerate_bab(const BivariatePolynomial& h, const EnumerationOptions& options = {});

EnumerationResult enumerate(const BivariatePolynomial& h, CycleType type, const EnumerationOptions& options = {});

// Closing polynomials of the two-equation systems, in the reduced form whose
// second member has degree at most n-1.
//   aba: P = H(0,y) - H(x,1),  Q~ = [H(x,0) - H(x,1)] + [H(0,y) - H(1,y)]
//   bab: P = H(0,y) - H(x,0),  Q~ = [H(0,y) - H(1,y)] - [H(x,0) - H(x,1)]
std::pair<BivariatePolynomial, BivariatePolynomial> closing_system(const BivariatePolynomial& h, CycleType type);

int theoretical_bound(CycleType type, int degree);

}  // namespace torus
