#include "torus/stress.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "torus/families.hpp"

namespace torus {

namespace {

constexpr std::array<CycleType, 4> kTypes = {CycleType::aa, CycleType::bb, CycleType::aba, CycleType::bab};

// Outcome of one type on one trial: either a count pair or the excluding error.
struct TypeOutcome {
  int candidates = 0;
  int passed = 0;
  std::optional<ErrorKind> excluded;
};

using TrialOutcome = std::array<TypeOutcome, 4>;

TrialOutcome run_trial(const BivariatePolynomial& h, const EnumerationOptions& options) {
  TrialOutcome out;
  for (std::size_t i = 0; i < kTypes.size(); ++i) {
    try {
      const EnumerationResult r = enumerate(h, kTypes[i], options);
      out[i].candidates = static_cast<int>(r.candidates.size());
      out[i].passed = static_cast<int>(
          std::count_if(r.candidates.begin(), r.candidates.end(), [](const auto& c) { return c.filters.passed(); }));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BoundViolation) throw;
      out[i].excluded = e.kind();
    }
  }
  return out;
}

}  // namespace

BivariatePolynomial stress_polynomial(std::uint64_t seed, int index, int degree, int coeff_num, int coeff_den) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(degree)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> num(-coeff_num, coeff_num), den(1, coeff_den);
  BivariatePolynomial h;
  for (int k = 1; k <= degree; ++k) {
    for (int j = 0; j <= k; ++j) h.add_monomial(fraction(num(rng), den(rng)), k - j, j);
  }
  if (h.is_zero() || h.degree() < degree) h.add_monomial(1, degree, 0);
  return h;
}

StressSummary run_stress(const StressOptions& o) {
  if (o.degree < 1 || o.degree > 8) throw Error(ErrorKind::InvariantViolation, "stress degree must lie in [1, 8]");
  if (o.trials < 1) throw Error(ErrorKind::InvariantViolation, "stress needs at least one trial");

  // Each trial writes only its own slot, so the aggregate does not depend on
  // the number of workers or the scheduling order.
  std::vector<TrialOutcome> outcomes(o.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < o.trials; i = next++) {
      try {
        outcomes[i] = run_trial(stress_polynomial(o.seed, i, o.degree, o.coeff_num, o.coeff_den), o.enumeration);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(o.workers > 0 ? o.workers : static_cast<int>(std::thread::hardware_concurrency()), 1,
                                 std::max(1, o.trials));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  StressSummary s;
  s.degree = o.degree;
  s.trials = o.trials;
  s.seed = o.seed;
  for (std::size_t i = 0; i < kTypes.size(); ++i) {
    StressTypeSummary& t = s.types[i];
    t.type = kTypes[i];
    t.bound = theoretical_bound(kTypes[i], o.degree);
    t.histogram.assign(t.bound + 1, 0);
    for (const TrialOutcome& trial : outcomes) {
      const TypeOutcome& r = trial[i];
      if (r.excluded) {
        ++t.excluded[to_string(*r.excluded)];
        continue;
      }
      ++t.admissible;
      t.max_candidates = std::max(t.max_candidates, r.candidates);
      t.max_passed = std::max(t.max_passed, r.passed);
      if (r.candidates > t.bound) {
        throw Error(ErrorKind::BoundViolation, std::string(to_string(t.type)) + ": " + std::to_string(r.candidates) +
                                                   " candidates exceed the bound " + std::to_string(t.bound));
      }
      ++t.histogram[r.passed];
    }
  }

  if (o.inject_example && o.degree == 3) {
    const TrialOutcome r = run_trial(six_aba_cubic(), o.enumeration);
    std::array<int, 4> counts{};
    for (std::size_t i = 0; i < kTypes.size(); ++i) {
      counts[i] = r[i].excluded ? 0 : r[i].passed;
      if (counts[i] > s.types[i].bound) {
        throw Error(ErrorKind::BoundViolation, std::string("injected example exceeds the ") + to_string(kTypes[i]) +
                                                   " bound");
      }
      s.types[i].max_passed = std::max(s.types[i].max_passed, counts[i]);
      s.types[i].max_candidates = std::max(s.types[i].max_candidates, counts[i]);
    }
    s.injected = counts;
  }
  return s;
}

ordered_json to_json(const StressSummary& s) {
  ordered_json j;
  j["degree"] = s.degree;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  ordered_json types;
  for (const StressTypeSummary& t : s.types) {
    ordered_json e;
    e["theoretical_bound"] = t.bound;
    e["admissible"] = t.admissible;
    e["max_candidates"] = t.max_candidates;
    e["max_passed"] = t.max_passed;
    e["within_bound"] = t.max_candidates <= t.bound;
    e["histogram"] = t.histogram;
    e["excluded"] = t.excluded;
    types[to_string(t.type)] = e;
  }
  j["types"] = types;
  if (s.injected) {
    ordered_json inj;
    for (std::size_t i = 0; i < kTypes.size(); ++i) inj[to_string(kTypes[i])] = (*s.injected)[i];
    j["injected_example"] = inj;
  } else {
    j["injected_example"] = nullptr;
  }
  return j;
}

}  // namespace torus
