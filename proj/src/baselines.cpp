#include "submodea/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "submodea/mutation.hpp"
#include "submodea/random.hpp"

namespace submodea {

Solution greedy(const Instance& inst) {
  const ObjectiveFunction& obj = *inst.objective;
  const CostFunction& cost = *inst.cost;

  Solution selected(inst.n);
  double f_sel = obj.evaluate(selected.bits());
  double c_sel = cost.evaluate(selected.bits());

  std::vector<bool> in_set(static_cast<std::size_t>(inst.n), false);
  for (;;) {
    int best_i = -1;
    double best_ratio = 0;
    double best_f = 0, best_c = 0;
    for (int i = 0; i < inst.n; ++i) {
      if (in_set[static_cast<std::size_t>(i)]) continue;
      BitString candidate = selected.bits();
      candidate.set(i);
      const double c_new = cost.evaluate(candidate);
      if (c_new > inst.budget) continue;
      const double dc = c_new - c_sel;
      if (dc <= 0)
        throw std::invalid_argument("greedy: non-positive marginal cost for element " +
                                    std::to_string(i));
      const double f_new = obj.evaluate(candidate);
      const double ratio = (f_new - f_sel) / dc;
      if (best_i < 0 || ratio > best_ratio) {
        best_i = i;
        best_ratio = ratio;
        best_f = f_new;
        best_c = c_new;
      }
    }
    if (best_i < 0) break;
    selected.set(best_i);
    in_set[static_cast<std::size_t>(best_i)] = true;
    f_sel = best_f;
    c_sel = best_c;
  }

  // Second candidate: the best feasible singleton.
  int best_single = -1;
  double best_single_f = 0;
  for (int v = 0; v < inst.n; ++v) {
    BitString single(inst.n);
    single.set(v);
    if (cost.evaluate(single) > inst.budget) continue;
    const double fv = obj.evaluate(single);
    if (best_single < 0 || fv > best_single_f) {
      best_single = v;
      best_single_f = fv;
    }
  }
  if (best_single >= 0 && best_single_f > f_sel) {
    Solution single(inst.n);
    single.set(best_single);
    evaluate_cached(inst, single);
    return single;
  }
  selected.store_objective(f_sel);
  selected.store_cost(c_sel);
  return selected;
}

OracleResult brute_force(const Instance& inst, const std::vector<double>& budgets) {
  constexpr int kMaxN = 24;
  if (inst.n > kMaxN)
    throw std::invalid_argument("brute_force: refusing n = " + std::to_string(inst.n) +
                                " (> " + std::to_string(kMaxN) + "; 2^n subsets)");
  OracleResult result;
  struct Tracker {
    bool found = false;
    double value = 0;
    std::uint64_t mask = 0;
  };
  std::vector<double> budget_list = budgets;
  std::vector<Tracker> best(budget_list.size());

  const std::uint64_t subsets = std::uint64_t{1} << inst.n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const BitString bits = BitString::from_mask(inst.n, mask);
    const double c = inst.cost->evaluate(bits);
    bool within_any = false;
    for (double b : budget_list) within_any = within_any || c <= b;
    if (!within_any) continue;
    const double f = inst.objective->evaluate(bits);
    for (std::size_t bi = 0; bi < budget_list.size(); ++bi) {
      if (c > budget_list[bi]) continue;
      // Strict improvement keeps the first (= smallest-mask) witness.
      if (!best[bi].found || f > best[bi].value) best[bi] = {true, f, mask};
    }
  }
  result.enumerated_count = static_cast<long long>(subsets);

  for (std::size_t bi = 0; bi < budget_list.size(); ++bi) {
    if (!best[bi].found) continue;  // budget below the empty set's cost
    Solution witness(BitString::from_mask(inst.n, best[bi].mask));
    evaluate_cached(inst, witness);
    result.per_budget_opt[budget_list[bi]] = {best[bi].value, std::move(witness)};
  }
  return result;
}

namespace {

// Pareto population for the multi-objective baseline. Infeasible solutions
// carry adjusted objective -1, below every feasible value. Entries are kept
// sorted by strictly increasing cost with strictly increasing adjusted
// objective; a candidate weakly dominated by any member is rejected.
struct ParetoFront {
  struct Member {
    Solution solution;
    double adjusted = 0;
    double cost = 0;
  };
  std::vector<Member> members;

  bool offer(Solution y, double adjusted, double cost) {
    auto le_end = std::partition_point(members.begin(), members.end(),
                                       [&](const Member& m) { return m.cost <= cost; });
    if (le_end != members.begin() && std::prev(le_end)->adjusted >= adjusted) return false;
    auto first = std::partition_point(members.begin(), members.end(),
                                      [&](const Member& m) { return m.cost < cost; });
    auto last = first;
    while (last != members.end() && last->adjusted <= adjusted) ++last;
    last = members.erase(first, last);
    members.insert(last, Member{std::move(y), adjusted, cost});
    return true;
  }
};

}  // namespace

RunRecord run_gsemo(const Instance& inst, long long max_evaluations, std::uint64_t seed) {
  if (max_evaluations < 0)
    throw std::invalid_argument("run_gsemo: max_evaluations must be non-negative");

  RandomSource rng(seed);
  const MutationOperator op{MutationKind::StandardBit, inst.n};

  RunRecord rec;
  rec.config = {"gsemo", inst.n, inst.budget, 0, max_evaluations, 0, MutationKind::StandardBit,
                seed};

  Solution empty(inst.n);
  const auto [f0, c0] = evaluate_cached(inst, empty);

  ParetoFront front;
  front.offer(empty, c0 <= inst.budget ? f0 : -1.0, c0);

  Solution best = empty;
  double best_f = f0;
  double best_c = c0;

  for (long long t = 0; t < max_evaluations; ++t) {
    const std::size_t pick = static_cast<std::size_t>(rng.next_below(front.members.size()));
    Solution y = op.mutate(front.members[pick].solution, rng);
    const auto [fy, cy] = evaluate_cached(inst, y);
    ++rec.evaluations_used;
    if (cy <= inst.budget && fy > best_f) {
      best = y;
      best_f = fy;
      best_c = cy;
    }
    front.offer(std::move(y), cy <= inst.budget ? fy : -1.0, cy);
  }

  rec.final_solution = std::move(best);
  rec.final_objective = best_f;
  rec.final_cost = best_c;
  return rec;
}

}  // namespace submodea
