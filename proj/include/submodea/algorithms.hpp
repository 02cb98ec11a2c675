#ifndef SUBMODEA_ALGORITHMS_HPP
#define SUBMODEA_ALGORITHMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "submodea/core.hpp"
#include "submodea/mutation.hpp"

namespace submodea {

struct OnePlusLambdaConfig {
  long long offspring_per_epoch = 1;  // lambda
  int budget = 1;                     // B; one epoch per unit of budget
  MutationKind mutation = MutationKind::StandardBit;
  std::uint64_t seed = 0;
};

struct ArchiveConfig {
  long long max_evaluations = 1;  // t_max, split evenly across ceil(B) epochs
  double budget = 1;              // B; may be fractional under general costs
  MutationKind mutation = MutationKind::StandardBit;
  std::uint64_t seed = 0;
};

struct ArchiveEntry {
  Solution solution;
  double objective = 0;
  double cost = 0;
};

/// Store of currently-infeasible solutions awaiting a larger working bound.
///
/// An entry is admitted iff no stored entry is at most as expensive and
/// strictly better. On admission, stored entries that the newcomer renders
/// redundant (at least as expensive, at most as good) are removed, so the
/// entries always form a cost-sorted front with non-decreasing objective and
/// the store stays small without changing what promotions deliver.
class Archive {
 public:
  /// Returns whether y was stored. Caller guarantees bound < c <= B.
  bool insert(Solution y, double objective, double cost);

  /// Removes every entry with cost <= bound.
  void purge_upto(double bound);

  /// Best entry with cost <= bound, or nullptr. Among equal objectives the
  /// cheapest entry wins, which coincides with first-inserted among the
  /// entries that can coexist.
  const ArchiveEntry* best_within(double bound) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t peak_size() const { return peak_; }
  const std::vector<ArchiveEntry>& entries() const { return entries_; }

 private:
  std::vector<ArchiveEntry> entries_;  // strictly increasing cost
  std::size_t peak_ = 0;
};

/// Inserts y using its cached objective/cost values; throws if they are not
/// filled. Caller has already verified bound < cost(y) <= B.
bool archive_insert(Archive& archive, const Solution& y);

struct EpochStat {
  double bound = 0;  // working bound after the epoch boundary
  double best_objective = 0;
  double best_cost = 0;
};

struct BudgetBest {
  double bound = 0;
  Solution solution;
  double objective = 0;
  double cost = 0;
};

struct RunConfigSnapshot {
  std::string algorithm;
  int n = 0;
  double budget = 0;
  long long offspring_per_epoch = 0;  // 0 when not applicable
  long long max_evaluations = 0;      // 0 when not applicable
  long long epoch_length = 0;         // 0 when not applicable
  MutationKind mutation = MutationKind::StandardBit;
  std::uint64_t seed = 0;
};

/// Per-run trace. final_solution always satisfies cost <= B; the incumbent
/// objective is non-decreasing over the run, so per_epoch_best objectives are
/// non-decreasing too.
struct RunRecord {
  RunConfigSnapshot config;
  std::vector<EpochStat> per_epoch_best;
  long long evaluations_used = 0;
  Solution final_solution;
  double final_objective = 0;
  double final_cost = 0;
  std::vector<BudgetBest> per_budget_best;  // best solution per working bound

  const BudgetBest* budget_best(double bound) const;
};

/// Budget-incrementing (1+lambda)-EA. Starts from the empty set with working
/// bound 0; each epoch raises the bound by one and samples
/// offspring_per_epoch mutants of the incumbent, keeping the best offspring
/// that is feasible for the raised bound and not worse than the running best.
/// Exactly budget * offspring_per_epoch objective evaluations.
RunRecord run_one_plus_lambda(const Instance& inst, const OnePlusLambdaConfig& cfg);

/// Budget-incrementing (1+1)-EA with archive. Runs epochs of
/// floor(t_max / ceil(B)) steps; offspring that exceed the working bound but
/// fit the final budget go to the archive; at each epoch boundary entries at
/// or below the old bound are dropped, the bound is raised (capped at B), and
/// the best now-feasible archive entry replaces the incumbent if not worse.
RunRecord run_one_plus_one_archive(const Instance& inst, const ArchiveConfig& cfg);

struct OnePlusLambdaParameters {
  long long offspring_per_epoch = 0;
  long long max_evaluations = 0;
};

/// Parameter choice under which the (1+lambda)-EA carries its uniform-
/// constraint approximation guarantee: lambda = ceil(2 e n ln n) and
/// t_max = r * lambda, with r the maximum budget.
OnePlusLambdaParameters one_plus_lambda_parameters(int n, int r);

struct ArchiveSchedule {
  long long epoch_length = 0;
  long long max_evaluations = 0;
};

/// Epoch length under which the archive variant carries its approximation
/// guarantee: ceil(e n ln(n B^2)) for the guarantee at every intermediate
/// bound simultaneously, ceil(e n ln(n B)) when only the final bound matters.
/// t_max = B * epoch_length either way.
ArchiveSchedule archive_parameters(int n, int budget, bool per_budget);

}  // namespace submodea

#endif  // SUBMODEA_ALGORITHMS_HPP
