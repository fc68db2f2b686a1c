#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torus/enumeration.hpp"
#include "torus/io.hpp"

namespace torus {

struct StressOptions {
  int degree = 2;
  int trials = 1000;
  std::uint64_t seed = 1;
  // 0 picks the hardware concurrency.
  int workers = 0;
  // At degree 3, also run the six-aba cubic and report it separately.
  bool inject_example = true;
  // Coefficients p/q with |p| <= coeff_num and 1 <= q <= coeff_den.
  int coeff_num = 9;
  int coeff_den = 4;
  EnumerationOptions enumeration;
};

struct StressTypeSummary {
  CycleType type = CycleType::bb;
  int bound = 0;
  // Trials where this type's hypotheses held (no degeneracy error).
  int admissible = 0;
  int max_candidates = 0;
  int max_passed = 0;
  // histogram[k] = number of admissible trials with k filter-passing candidates.
  std::vector<int> histogram;
  std::map<std::string, int> excluded;
};

struct StressSummary {
  int degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::array<StressTypeSummary, 4> types;
  // Counts of filter-passing candidates on the injected example, per type.
  std::optional<std::array<int, 4>> injected;
};

// Random H of exact degree n with H(0,0) = 0 for trial `index`; depends only on
// (seed, index).
BivariatePolynomial stress_polynomial(std::uint64_t seed, int index, int degree, int coeff_num, int coeff_den);

// Runs the sweep on a worker pool. Inputs whose enumeration reports a
// degeneracy (the bound hypotheses fail) are tallied and excluded. Throws
// InvariantViolation for degree outside [1, 8] or trials < 1, and
// BoundViolation if any admissible count exceeds its bound.
StressSummary run_stress(const StressOptions& options);

ordered_json to_json(const StressSummary& summary);

}  // namespace torus
