#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/bivariate.hpp"
#include "torus/enumeration.hpp"
#include "torus/error.hpp"
#include "torus/geometry.hpp"

namespace torus {

struct TraceOptions {
  double initial_step = 1e-3;
  double min_step = 1e-6;
  double max_step = 1e-2;
  // Chord sagitta bound used to cap the step by curvature.
  double max_sagitta = 1e-7;
  double closure_tol = 1e-6;
  // A re-entry this close to the start ends the trace; closed iff within closure_tol.
  double closure_capture = 1e-3;
  double level_drift_tol = 1e-8;
  double grad_floor = 1e-8;
  double tangency_tol = 1e-10;
  double edge_tol = 1e-12;
  double corner_tol = 1e-9;
  int max_crossings = 8;
  int max_steps = 1000000;
  // +1 follows X_H = (-H_y, H_x), -1 the reversed field.
  int direction = 1;
};

struct Crossing {
  EdgePoint exit;
  EdgePoint entry;  // exit.partner()
  FilippovClass cls = FilippovClass::sewing;
  double nu_plus = 0.0;
  double nu_minus = 0.0;
  // |H(entry) - H(exit)|; the next segment is re-anchored at H(entry).
  double level_jump = 0.0;
};

// Level curve followed through the glued square. Each segment is a polyline in
// the closed square running from an edge entry point to the next exit point.
struct TracedCurve {
  EdgePoint start;  // edge point where the first segment enters the square
  double level = 0.0;
  std::vector<std::vector<TorusPoint>> segments;
  std::vector<double> segment_levels;
  std::vector<Crossing> crossings;
  // Start seam letter followed by one letter per crossing: a = left/right, b = bottom/top.
  std::string word;
  bool closed = false;
  double closure_error = 0.0;
  double max_drift = 0.0;
  double min_grad = 0.0;
  double max_level_jump = 0.0;
  long steps = 0;
};

// Tracer failure carrying the curve up to the failure point.
class TraceError : public Error {
 public:
  TraceError(ErrorKind kind, const std::string& message, TracedCurve partial)
      : Error(kind, message), partial_(std::move(partial)) {}
  const TracedCurve& partial() const noexcept { return partial_; }

 private:
  TracedCurve partial_;
};

// Starts at `start` if the field enters the square there, otherwise at its
// partner. Throws CornerPoint, and TraceError for StartOnCriticalPoint,
// TangencyEncountered, NonSewingCrossing, GradientFloorHit, CornerEncountered,
// MaxCrossingsExceeded and StepLimitExceeded.
TracedCurve trace_level_curve(const BivariatePolynomial& h, const EdgePoint& start, const TraceOptions& options = {});

// Letter of a seam: a for left/right, b for bottom/top.
char seam_letter(Edge e);

// Expected word of a closed cycle of the given type, e.g. "aba".
std::string cycle_word(CycleType type);

// Closed words compared by their periods (last letter dropped) up to cyclic
// rotation and reversal: "aba" ~ "bab", "bb" ~ "bb".
bool same_cyclic_word(const std::string& a, const std::string& b);

struct SeamArc {
  EdgePoint from;
  EdgePoint to;
};

// Arcs a cycle of the candidate's type must consist of (unordered endpoints).
std::vector<SeamArc> declared_arcs(const CycleCandidate& cand);

struct VerifyOptions {
  TraceOptions trace;
  // Edge coordinate tolerance when matching trace endpoints to declared seams.
  double seam_tol = 1e-6;
  // Also fail with ExtraEdgeIncidence when another branch of a cycle level
  // meets the boundary (the whole-level-set requirement of the quadratic bb
  // existence criterion).
  bool strict_level_set = false;
};

struct VerificationRecord {
  bool verified = false;
  std::optional<ErrorKind> failure;
  std::string message;
  // Full trace, or the partial trace when the tracer failed.
  std::optional<TracedCurve> curve;
  std::string word;
  bool closed = false;
  bool all_sewing = false;
  double closure_error = 0.0;
  double max_drift = 0.0;
  double min_grad = 0.0;
  double max_level_jump = 0.0;
  // Boundary points of the candidate's level sets other than its seams.
  std::vector<EdgePoint> stray_points;
  int stray_level_incidences = 0;
};

// Traces from the candidate's first seam point and checks closure, word,
// sewing crossings, the gradient floor and that every traced arc joins the
// declared seams (ExtraEdgeIncidence otherwise). Failures are reported in the
// record, not thrown.
VerificationRecord verify_cycle(const BivariatePolynomial& h, const CycleCandidate& cand,
                                const VerifyOptions& options = {});

// Hausdorff distance between the point sets of two traces, each taken as the
// union of its polyline segments in the square.
double hausdorff_distance(const TracedCurve& a, const TracedCurve& b);

// Throws the record's failure, if any.
void require_verified(const VerificationRecord& record);

// Points of {H = level} on the boundary of the square (continuum edges
// contribute their midpoint).
std::vector<EdgePoint> level_boundary_points(const BivariatePolynomial& h, double level);

// Independent double-precision oracle: grid scans of the closing equations in
// their unreduced four-point form, refined by bisection and 2-D Newton and
// deduplicated at 1e-8. Returns candidates of all four types with levels and the
// interior filter set; a type whose equations share a continuum of solutions
// contributes none. Requires grid >= 64.
std::vector<CycleCandidate> brute_force_cycle_scan(const BivariatePolynomial& h, int grid);

// Whole-geometry existence of the bb cycle of a x^2 + b x y + c y^2: a
// candidate passing the enumeration filters, verified by tracing with the
// strict level-set check, so its level meets the boundary only at its two seams.
struct GeometricBbVerdict {
  bool exists = false;
  std::optional<double> x0;
  std::optional<VerificationRecord> record;
  std::string reason;
};

GeometricBbVerdict quadratic_bb_geometric(const Rational& a, const Rational& b, const Rational& c,
                                          const VerifyOptions& options = {});

}  // namespace torus
