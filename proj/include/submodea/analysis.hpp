#ifndef SUBMODEA_ANALYSIS_HPP
#define SUBMODEA_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submodea/algorithms.hpp"
#include "submodea/core.hpp"

namespace submodea {

/// Result of the exact submodularity-ratio computation:
/// the minimum over all X subset-of Y, v outside Y of
/// (f(X+v) - f(X)) / (f(Y+v) - f(Y)), restricted to positive denominators.
/// Equals 1 exactly iff f is submodular (given some positive marginal).
struct SubmodularityReport {
  std::optional<double> alpha;  // empty when no pair constrains the ratio
  BitString witness_small;      // X of the minimizing triple
  BitString witness_large;      // Y of the minimizing triple
  int witness_element = -1;     // v of the minimizing triple
  long long triples_checked = 0;
  // Triples with zero denominator but positive numerator: their ratio is
  // unbounded, so they never attain the minimum and are skipped. Counted
  // here since they are the extreme diminishing-returns cases.
  long long unbounded_triples = 0;
};

/// Exact enumeration over all (X, Y, v); refuses n > 14 (3^n pair growth).
SubmodularityReport submodularity_ratio(const ObjectiveFunction& obj);

/// Checks f(x_star) <= f(x) + r * delta, where delta is the largest marginal
/// gain at x among elements of x_star \ x and r = |x_star|. Holds for every
/// pair of sets whenever f is monotone and submodular.
struct MarginalGainBoundResult {
  bool holds = false;
  double slack = 0;   // f(x) + r*delta - f(x_star)
  double delta = 0;   // 0 when x_star \ x is empty
  int r = 0;          // |x_star|
  // x_star \ x empty yet f(x_star) > f(x): impossible for monotone f.
  bool monotonicity_violation = false;
};

MarginalGainBoundResult check_marginal_gain_bound(const ObjectiveFunction& obj,
                                                  const Solution& x_star, const Solution& x);

/// Two-sided Mann-Whitney U rank-sum test. Exact enumeration of the null
/// distribution for combined sample size <= 20, normal approximation with
/// tie correction and continuity correction above that. Identical constant
/// samples give p = 1.
double rank_sum_test(const std::vector<double>& samples_a, const std::vector<double>& samples_b);

/// The two modes behind rank_sum_test, callable directly so they can be
/// cross-checked against each other. The exact mode enumerates all labelings
/// and refuses combined sizes above 24.
double rank_sum_test_exact(const std::vector<double>& samples_a,
                           const std::vector<double>& samples_b);
double rank_sum_test_normal(const std::vector<double>& samples_a,
                            const std::vector<double>& samples_b);

/// Mean and sample standard deviation (n-1 divisor; 0 for a single value).
std::pair<double, double> mean_std(const std::vector<double>& values);

/// Mean/std of the final objective values of a batch of runs.
std::pair<double, double> summarize(const std::vector<RunRecord>& records);

/// One row of the benchmark comparison table: two algorithms side by side
/// plus the p-value of their rank-sum comparison.
struct ComparisonRow {
  std::string graph_name;
  double budget = 0;
  long long max_evaluations = 0;
  double mean_a = 0;
  double std_a = 0;
  double mean_b = 0;
  double std_b = 0;
  double p_value = 1;
};

}  // namespace submodea

#endif  // SUBMODEA_ANALYSIS_HPP
