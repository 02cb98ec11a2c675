#include "submodea/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "submodea/random.hpp"

namespace submodea {

bool Archive::insert(Solution y, double objective, double cost) {
  // entries_ is sorted by strictly increasing cost with non-decreasing
  // objective, so the best objective among entries with cost <= c is the
  // last such entry's.
  auto le_end = std::partition_point(entries_.begin(), entries_.end(),
                                     [&](const ArchiveEntry& e) { return e.cost <= cost; });
  if (le_end != entries_.begin() && std::prev(le_end)->objective > objective) return false;
  // Drop entries the newcomer makes redundant: cost >= c and objective <= f.
  // They form a contiguous run starting at the first entry with cost >= c.
  auto first = std::partition_point(entries_.begin(), entries_.end(),
                                    [&](const ArchiveEntry& e) { return e.cost < cost; });
  auto last = first;
  while (last != entries_.end() && last->objective <= objective) ++last;
  last = entries_.erase(first, last);
  entries_.insert(last, ArchiveEntry{std::move(y), objective, cost});
  peak_ = std::max(peak_, entries_.size());
  return true;
}

void Archive::purge_upto(double bound) {
  auto split = std::partition_point(
      entries_.begin(), entries_.end(),
      [&](const ArchiveEntry& e) { return e.cost <= bound; });
  entries_.erase(entries_.begin(), split);
}

const ArchiveEntry* Archive::best_within(double bound) const {
  auto split = std::partition_point(
      entries_.begin(), entries_.end(),
      [&](const ArchiveEntry& e) { return e.cost <= bound; });
  if (split == entries_.begin()) return nullptr;
  auto best = std::prev(split);
  while (best != entries_.begin() && std::prev(best)->objective == best->objective) --best;
  return &*best;
}

bool archive_insert(Archive& archive, const Solution& y) {
  if (!y.cached_objective() || !y.cached_cost())
    throw std::invalid_argument("archive_insert: solution must carry cached values");
  return archive.insert(y, *y.cached_objective(), *y.cached_cost());
}

const BudgetBest* RunRecord::budget_best(double bound) const {
  for (const auto& entry : per_budget_best)
    if (entry.bound == bound) return &entry;
  return nullptr;
}

namespace {

Solution evaluated_empty(const Instance& inst) {
  Solution s(inst.n);
  evaluate_cached(inst, s);
  return s;
}

}  // namespace

RunRecord run_one_plus_lambda(const Instance& inst, const OnePlusLambdaConfig& cfg) {
  if (cfg.offspring_per_epoch < 1)
    throw std::invalid_argument("run_one_plus_lambda: offspring_per_epoch must be >= 1");
  if (cfg.budget < 1 || cfg.budget > inst.n)
    throw std::invalid_argument("run_one_plus_lambda: budget must lie in [1, n]");

  RandomSource rng(cfg.seed);
  const MutationOperator op{cfg.mutation, inst.n};

  RunRecord rec;
  rec.config = {"opla",       inst.n,   static_cast<double>(cfg.budget),
                cfg.offspring_per_epoch, 0, 0, cfg.mutation, cfg.seed};

  Solution incumbent = evaluated_empty(inst);
  double f_inc = *incumbent.cached_objective();
  double c_inc = *incumbent.cached_cost();
  rec.per_budget_best.push_back({0.0, incumbent, f_inc, c_inc});

  for (int bound = 1; bound <= cfg.budget; ++bound) {
    Solution best = incumbent;
    double f_best = f_inc;
    double c_best = c_inc;
    for (long long k = 0; k < cfg.offspring_per_epoch; ++k) {
      Solution y = op.mutate(incumbent, rng);
      const auto [fy, cy] = evaluate_cached(inst, y);
      ++rec.evaluations_used;
      if (cy <= static_cast<double>(bound) && fy >= f_best) {
        best = std::move(y);
        f_best = fy;
        c_best = cy;
      }
    }
    incumbent = std::move(best);
    f_inc = f_best;
    c_inc = c_best;
    assert(c_inc <= static_cast<double>(bound));
    rec.per_epoch_best.push_back({static_cast<double>(bound), f_inc, c_inc});
    rec.per_budget_best.push_back({static_cast<double>(bound), incumbent, f_inc, c_inc});
  }

  if (rec.evaluations_used != static_cast<long long>(cfg.budget) * cfg.offspring_per_epoch)
    throw internal_error("run_one_plus_lambda: evaluation count drifted from budget * lambda");

  rec.final_solution = std::move(incumbent);
  rec.final_objective = f_inc;
  rec.final_cost = c_inc;
  return rec;
}

RunRecord run_one_plus_one_archive(const Instance& inst, const ArchiveConfig& cfg) {
  if (cfg.budget <= 0)
    throw std::invalid_argument("run_one_plus_one_archive: budget must be positive");
  const long long epochs = static_cast<long long>(std::ceil(cfg.budget));
  const long long epoch_length = cfg.max_evaluations / epochs;
  if (epoch_length < 1)
    throw std::invalid_argument(
        "run_one_plus_one_archive: max_evaluations too small for one step per epoch");

  RandomSource rng(cfg.seed);
  const MutationOperator op{cfg.mutation, inst.n};

  RunRecord rec;
  rec.config = {"opoa", inst.n,       cfg.budget, 0,
                cfg.max_evaluations,  epoch_length, cfg.mutation, cfg.seed};

  Solution incumbent = evaluated_empty(inst);
  double f_inc = *incumbent.cached_objective();
  double c_inc = *incumbent.cached_cost();
  rec.per_budget_best.push_back({0.0, incumbent, f_inc, c_inc});

  Archive archive;
  double bound = 0.0;
  long long t = 0;

  while (bound <= cfg.budget && t < cfg.max_evaluations) {
    for (long long k = 0; k < epoch_length && t < cfg.max_evaluations; ++k) {
      Solution y = op.mutate(incumbent, rng);
      ++t;
      const auto [fy, cy] = evaluate_cached(inst, y);
      if (cy > bound && cy <= cfg.budget) {
        archive_insert(archive, y);
      }
      if (cy <= bound && fy >= f_inc) {
        incumbent = std::move(y);
        f_inc = fy;
        c_inc = cy;
        rec.per_budget_best.back() = {bound, incumbent, f_inc, c_inc};
      }
      assert(c_inc <= bound && bound <= cfg.budget);
    }
    archive.purge_upto(bound);
    bound = std::min(bound + 1.0, cfg.budget);
    if (const ArchiveEntry* promoted = archive.best_within(bound)) {
      if (promoted->objective >= f_inc) {
        incumbent = promoted->solution;
        f_inc = promoted->objective;
        c_inc = promoted->cost;
      }
    }
    rec.per_epoch_best.push_back({bound, f_inc, c_inc});
    if (rec.per_budget_best.back().bound == bound)
      rec.per_budget_best.back() = {bound, incumbent, f_inc, c_inc};
    else
      rec.per_budget_best.push_back({bound, incumbent, f_inc, c_inc});
  }

  rec.evaluations_used = t;
  if (t > cfg.max_evaluations)
    throw internal_error("run_one_plus_one_archive: evaluation budget exceeded");

  rec.final_solution = std::move(incumbent);
  rec.final_objective = f_inc;
  rec.final_cost = c_inc;
  return rec;
}

OnePlusLambdaParameters one_plus_lambda_parameters(int n, int r) {
  if (n < 2) throw std::invalid_argument("one_plus_lambda_parameters: n must be >= 2");
  if (r < 1 || r > n) throw std::invalid_argument("one_plus_lambda_parameters: need 1 <= r <= n");
  const double e = std::exp(1.0);
  const long long lambda =
      static_cast<long long>(std::ceil(2.0 * e * n * std::log(static_cast<double>(n))));
  return {lambda, static_cast<long long>(r) * lambda};
}

ArchiveSchedule archive_parameters(int n, int budget, bool per_budget) {
  if (n < 2) throw std::invalid_argument("archive_parameters: n must be >= 2");
  if (budget < 1) throw std::invalid_argument("archive_parameters: budget must be >= 1");
  const double e = std::exp(1.0);
  const double b = static_cast<double>(budget);
  const double inner = per_budget ? static_cast<double>(n) * b * b : static_cast<double>(n) * b;
  const long long epoch_length = static_cast<long long>(std::ceil(e * n * std::log(inner)));
  return {epoch_length, static_cast<long long>(budget) * epoch_length};
}

}  // namespace submodea
