#ifndef SUBMODEA_PROBLEMS_HPP
#define SUBMODEA_PROBLEMS_HPP

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "submodea/core.hpp"
#include "submodea/random.hpp"

namespace submodea {

/// Undirected simple graph backing the coverage objective. Adjacency lists
/// are sorted, symmetric, self-loop free; immutable after construction.
struct CoverageInstanceData {
  int n = 0;
  std::vector<std::vector<int>> adjacency;
  std::string graph_name;

  /// Builds from an arbitrary edge list: symmetrizes, drops self-loops and
  /// duplicates. Indices must lie in [0, n).
  static CoverageInstanceData from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                         std::string name = "");
};

/// Graph max-coverage value of a selection: the number of nodes that are
/// selected or adjacent to a selected node, |X ∪ N(X)|. Integer-valued.
double coverage_evaluate(const CoverageInstanceData& data, const Solution& x);

class CoverageObjective : public ObjectiveFunction {
 public:
  explicit CoverageObjective(CoverageInstanceData data) : data_(std::move(data)) {}

  int n() const override { return data_.n; }
  double evaluate(const BitString& x) const override;
  const CoverageInstanceData& data() const { return data_; }

 private:
  CoverageInstanceData data_;
};

/// Modular (linear) set function: f(X) = sum of per-element weights.
/// Doubles as the knapsack profit function.
class LinearObjective : public ObjectiveFunction {
 public:
  explicit LinearObjective(std::vector<double> weights) : weights_(std::move(weights)) {}

  int n() const override { return static_cast<int>(weights_.size()); }
  double evaluate(const BitString& x) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Additive cost with strictly positive per-element weights.
/// All weights equal to one gives the cardinality (uniform) constraint.
class LinearCost : public CostFunction {
 public:
  explicit LinearCost(std::vector<double> weights);

  static LinearCost uniform(int n) { return LinearCost(std::vector<double>(n, 1.0)); }

  int n() const override { return static_cast<int>(weights_.size()); }
  double evaluate(const BitString& x) const override;
  double min_increment() const override { return min_weight_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  double min_weight_ = 0;
};

/// Knapsack family on which budget-incrementing selection without an archive
/// stalls: items 1..n-1 have weight 1 and profit 1; item n has weight n-1 and
/// profit L >> n; the budget is n-1. The optimum is item n alone, but it only
/// fits once every other chosen item is removed in the same step.
struct KnapsackCounterexample {
  int n = 0;
  double large_profit = 0;  // L; default 2^n capped at 2^53 to stay exact

  explicit KnapsackCounterexample(int n_items, double L = 0);

  std::vector<double> profits() const;
  std::vector<double> weights() const;
  double budget() const { return n - 1; }
  Instance make_instance() const;
};

double knapsack_objective(const KnapsackCounterexample& kc, const Solution& x);

/// n independent per-element costs drawn uniformly from [0.5, 1.5].
LinearCost make_random_costs(int n, RandomSource& rng);

/// The four benchmark budgets for a graph of n nodes:
/// floor(log2 n), floor(sqrt n), floor(n/20), floor(n/10). Requires n >= 20;
/// values may coincide for small n.
std::array<int, 4> budget_grid(int n);

}  // namespace submodea

#endif  // SUBMODEA_PROBLEMS_HPP
