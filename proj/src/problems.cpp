#include "submodea/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace submodea {

CoverageInstanceData CoverageInstanceData::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  if (n <= 0) throw std::invalid_argument("CoverageInstanceData: n must be positive");
  CoverageInstanceData data;
  data.n = n;
  data.graph_name = std::move(name);
  data.adjacency.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("CoverageInstanceData: edge endpoint out of range");
    if (u == v) continue;
    data.adjacency[static_cast<std::size_t>(u)].push_back(v);
    data.adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : data.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return data;
}

namespace {

// Per-thread scratch for coverage counting. A node is covered in the current
// evaluation iff its stamp equals the evaluation's stamp, so the array never
// needs clearing between calls. Shared instances stay safe for concurrent
// reads because all mutable state lives here.
struct CoverageScratch {
  std::vector<std::uint64_t> stamp_of;
  std::uint64_t stamp = 0;
};

thread_local CoverageScratch coverage_scratch;

int covered_count(const CoverageInstanceData& data, const BitString& x) {
  auto& scratch = coverage_scratch;
  if (scratch.stamp_of.size() < static_cast<std::size_t>(data.n)) {
    scratch.stamp_of.assign(static_cast<std::size_t>(data.n), 0);
    scratch.stamp = 0;
  }
  const std::uint64_t stamp = ++scratch.stamp;
  int covered = 0;
  auto mark = [&](int node) {
    if (scratch.stamp_of[static_cast<std::size_t>(node)] != stamp) {
      scratch.stamp_of[static_cast<std::size_t>(node)] = stamp;
      ++covered;
    }
  };
  x.for_each_set([&](int node) {
    mark(node);
    for (int nbr : data.adjacency[static_cast<std::size_t>(node)]) mark(nbr);
  });
  return covered;
}

}  // namespace

double coverage_evaluate(const CoverageInstanceData& data, const Solution& x) {
  if (x.size() != data.n) throw std::invalid_argument("coverage_evaluate: length mismatch");
  return static_cast<double>(covered_count(data, x.bits()));
}

double CoverageObjective::evaluate(const BitString& x) const {
  if (x.size() != data_.n) throw std::invalid_argument("CoverageObjective: length mismatch");
  return static_cast<double>(covered_count(data_, x));
}

double LinearObjective::evaluate(const BitString& x) const {
  if (x.size() != n()) throw std::invalid_argument("LinearObjective: length mismatch");
  double total = 0;
  x.for_each_set([&](int i) { total += weights_[static_cast<std::size_t>(i)]; });
  return total;
}

LinearCost::LinearCost(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("LinearCost: empty weight vector");
  min_weight_ = weights_[0];
  for (double w : weights_) {
    if (w <= 0) throw std::invalid_argument("LinearCost: weights must be positive");
    min_weight_ = std::min(min_weight_, w);
  }
}

double LinearCost::evaluate(const BitString& x) const {
  if (x.size() != n()) throw std::invalid_argument("LinearCost: length mismatch");
  double total = 0;
  x.for_each_set([&](int i) { total += weights_[static_cast<std::size_t>(i)]; });
  return total;
}

KnapsackCounterexample::KnapsackCounterexample(int n_items, double L) : n(n_items) {
  if (n < 3) throw std::invalid_argument("KnapsackCounterexample: need n >= 3");
  if (L <= 0) {
    large_profit = n >= 53 ? 9007199254740992.0 /* 2^53 */ : std::ldexp(1.0, n);
  } else {
    large_profit = L;
  }
}

std::vector<double> KnapsackCounterexample::profits() const {
  std::vector<double> p(static_cast<std::size_t>(n), 1.0);
  p.back() = large_profit;
  return p;
}

std::vector<double> KnapsackCounterexample::weights() const {
  std::vector<double> w(static_cast<std::size_t>(n), 1.0);
  w.back() = static_cast<double>(n - 1);
  return w;
}

Instance KnapsackCounterexample::make_instance() const {
  return Instance(std::make_shared<LinearObjective>(profits()),
                  std::make_shared<LinearCost>(weights()), budget());
}

double knapsack_objective(const KnapsackCounterexample& kc, const Solution& x) {
  return LinearObjective(kc.profits()).evaluate(x.bits());
}

LinearCost make_random_costs(int n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("make_random_costs: n must be >= 1");
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& wi : w) wi = rng.uniform(0.5, 1.5);
  return LinearCost(std::move(w));
}

std::array<int, 4> budget_grid(int n) {
  if (n < 20) throw std::invalid_argument("budget_grid: n must be >= 20");
  return {static_cast<int>(std::floor(std::log2(static_cast<double>(n)))),
          static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))),
          n / 20, n / 10};
}

}  // namespace submodea
