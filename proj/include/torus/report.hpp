#pragma once

#include <string>
#include <vector>

#include "torus/enumeration.hpp"
#include "torus/io.hpp"
#include "torus/verification.hpp"

namespace torus {

struct AnalyzeOptions {
  EnumerationOptions enumeration;
  VerifyOptions verify;
  // Trace every candidate that passed the enumeration filters.
  bool trace = true;
  // Include wall-clock timing (the only non-deterministic field).
  bool timing = true;
};

// Full analysis: per-type sections (bound, candidates with filter verdicts and
// verification records, degeneracy flags), the quadratic section when n = 2,
// tolerances and timing. Field order is fixed.
ordered_json analyze(const PolynomialInput& input, const AnalyzeOptions& options = {});

// Quadratic criteria for a x^2 + b x y + c y^2: bb condition table with
// witness, aba closed-form analysis with clause, and a cross-check against the
// general enumerator and the tracer. Throws InvariantViolation for (0, 0, 0).
ordered_json quadratic_verdict(const Rational& a, const Rational& b, const Rational& c,
                               const AnalyzeOptions& options = {});

// Pretty-printed report; throws BoundViolation if any section reports more
// candidates than its theoretical bound.
std::string serialize_report(const ordered_json& report);

ordered_json to_json(const VerificationRecord& record);
ordered_json to_json(const CycleCandidate& cand, ArithmeticMode mode);

// "segment_index,x,y" rows.
std::string curve_csv(const TracedCurve& curve);

// One row per crossing: index, exit edge and coordinate, class, normal
// components and level jump.
std::string crossings_csv(const TracedCurve& curve);

// 512x512 SVG of the unit square with the polyline, the crossing seams and the
// start point.
std::string curve_svg(const TracedCurve& curve, const std::string& title = "");

}  // namespace torus
