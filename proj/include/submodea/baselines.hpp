#ifndef SUBMODEA_BASELINES_HPP
#define SUBMODEA_BASELINES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "submodea/algorithms.hpp"
#include "submodea/core.hpp"

namespace submodea {

/// Generalized greedy: starting from the empty set, repeatedly add the
/// feasible element with the largest marginal gain per marginal cost until
/// nothing fits; return the better of that set and the best feasible
/// singleton. Ties break toward the lowest element index.
Solution greedy(const Instance& inst);

struct OptimumEntry {
  double value = 0;
  Solution witness;  // deterministic: smallest bit mask among maximizers
};

struct OracleResult {
  std::map<double, OptimumEntry> per_budget_opt;
  long long enumerated_count = 0;
};

/// Exhaustive optimum per requested budget. Enumerates all 2^n subsets once;
/// refuses n > 24.
OracleResult brute_force(const Instance& inst, const std::vector<double>& budgets);

/// Baseline global multi-objective optimizer over (objective, cost) with a
/// Pareto population: uniform parent selection, standard-bit-mutation, and
/// solutions over budget ranked below every feasible one. Returns the best
/// feasible solution generated within t_max offspring evaluations.
RunRecord run_gsemo(const Instance& inst, long long max_evaluations, std::uint64_t seed);

}  // namespace submodea

#endif  // SUBMODEA_BASELINES_HPP
