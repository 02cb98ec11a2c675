#include "submodea/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace submodea {

SubmodularityReport submodularity_ratio(const ObjectiveFunction& obj) {
  const int n = obj.n();
  if (n > 14)
    throw std::invalid_argument("submodularity_ratio: refusing n > 14 (exhaustive enumeration)");

  // Table of f over all subsets, then pure mask arithmetic below.
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<double> f(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    f[mask] = obj.evaluate(BitString::from_mask(n, mask));

  SubmodularityReport report;
  bool have_min = false;
  double best = 0;
  std::uint64_t best_small = 0, best_large = 0;
  int best_element = -1;

  for (std::uint64_t large = 0; large < subsets; ++large) {
    for (int v = 0; v < n; ++v) {
      if (large & (std::uint64_t{1} << v)) continue;
      const std::uint64_t vbit = std::uint64_t{1} << v;
      const double denom = f[large | vbit] - f[large];
      // Enumerate X over all subsets of Y, including X = Y and X = empty.
      std::uint64_t small = large;
      for (;;) {
        ++report.triples_checked;
        const double num = f[small | vbit] - f[small];
        if (denom > 0) {
          const double ratio = num / denom;
          if (!have_min || ratio < best) {
            have_min = true;
            best = ratio;
            best_small = small;
            best_large = large;
            best_element = v;
          }
        } else if (num > 0) {
          ++report.unbounded_triples;
        }
        if (small == 0) break;
        small = (small - 1) & large;
      }
    }
  }

  if (have_min) {
    report.alpha = best;
    report.witness_small = BitString::from_mask(n, best_small);
    report.witness_large = BitString::from_mask(n, best_large);
    report.witness_element = best_element;
  }
  return report;
}

MarginalGainBoundResult check_marginal_gain_bound(const ObjectiveFunction& obj,
                                                  const Solution& x_star, const Solution& x) {
  if (x_star.size() != obj.n() || x.size() != obj.n())
    throw std::invalid_argument("check_marginal_gain_bound: length mismatch");

  const double f_star = obj.evaluate(x_star.bits());
  const double f_x = obj.evaluate(x.bits());

  MarginalGainBoundResult result;
  result.r = x_star.count();

  bool any_missing = false;
  x_star.bits().for_each_set([&](int v) {
    if (x.test(v)) return;
    any_missing = true;
    BitString with = x.bits();
    with.set(v);
    result.delta = std::max(result.delta, obj.evaluate(with) - f_x);
  });

  if (!any_missing && f_star > f_x) result.monotonicity_violation = true;

  result.slack = f_x + result.r * result.delta - f_star;
  result.holds = f_star <= f_x + result.r * result.delta;
  return result;
}

namespace {

// Doubled Mann-Whitney U statistic of the subset `mask` of the pooled values
// against its complement: each (a, b) pair contributes 2 when a > b and 1 on
// a tie. Integer-exact, which keeps the enumeration free of rounding.
long long doubled_u(const std::vector<double>& pooled, std::uint64_t mask) {
  long long u2 = 0;
  const int total = static_cast<int>(pooled.size());
  for (int i = 0; i < total; ++i) {
    if (!(mask & (std::uint64_t{1} << i))) continue;
    for (int j = 0; j < total; ++j) {
      if (mask & (std::uint64_t{1} << j)) continue;
      if (pooled[i] > pooled[j])
        u2 += 2;
      else if (pooled[i] == pooled[j])
        u2 += 1;
    }
  }
  return u2;
}

double rank_sum_exact(const std::vector<double>& a, const std::vector<double>& b) {
  const int n1 = static_cast<int>(a.size());
  const int total = n1 + static_cast<int>(b.size());
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());

  std::uint64_t observed_mask = (std::uint64_t{1} << n1) - 1;
  const long long u2_obs = doubled_u(pooled, observed_mask);
  const long long u2_max = 2ll * n1 * (total - n1);
  const long long u2_small = std::min(u2_obs, u2_max - u2_obs);

  long long at_or_below = 0, labelings = 0;
  const std::uint64_t masks = std::uint64_t{1} << total;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (std::popcount(mask) != n1) continue;
    ++labelings;
    if (doubled_u(pooled, mask) <= u2_small) ++at_or_below;
  }
  return std::min(1.0, 2.0 * static_cast<double>(at_or_below) / static_cast<double>(labelings));
}

double rank_sum_normal(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n1 = a.size(), n2 = b.size();
  const std::size_t total = n1 + n2;

  std::vector<std::pair<double, int>> pooled;
  pooled.reserve(total);
  for (double v : a) pooled.emplace_back(v, 0);
  for (double v : b) pooled.emplace_back(v, 1);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // Midranks with tie bookkeeping for the variance correction.
  double rank_sum_a = 0;
  double tie_term = 0;  // sum of t^3 - t over tie groups
  std::size_t i = 0;
  while (i < total) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k)
      if (pooled[k].second == 0) rank_sum_a += midrank;
    tie_term += t * t * t - t;
    i = j;
  }

  const double u1 = rank_sum_a - static_cast<double>(n1) * (static_cast<double>(n1) + 1) / 2.0;
  const double mean = static_cast<double>(n1) * static_cast<double>(n2) / 2.0;
  const double nn = static_cast<double>(total);
  const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                          ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
  if (variance <= 0) return 1.0;  // all values tied
  const double z = std::max(std::abs(u1 - mean) - 0.5, 0.0) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace

double rank_sum_test(const std::vector<double>& samples_a, const std::vector<double>& samples_b) {
  if (samples_a.empty() || samples_b.empty())
    throw std::invalid_argument("rank_sum_test: both samples must be non-empty");
  if (samples_a.size() + samples_b.size() <= 20) return rank_sum_exact(samples_a, samples_b);
  return rank_sum_normal(samples_a, samples_b);
}

double rank_sum_test_exact(const std::vector<double>& samples_a,
                           const std::vector<double>& samples_b) {
  if (samples_a.empty() || samples_b.empty())
    throw std::invalid_argument("rank_sum_test_exact: both samples must be non-empty");
  if (samples_a.size() + samples_b.size() > 24)
    throw std::invalid_argument("rank_sum_test_exact: combined size too large to enumerate");
  return rank_sum_exact(samples_a, samples_b);
}

double rank_sum_test_normal(const std::vector<double>& samples_a,
                            const std::vector<double>& samples_b) {
  if (samples_a.empty() || samples_b.empty())
    throw std::invalid_argument("rank_sum_test_normal: both samples must be non-empty");
  return rank_sum_normal(samples_a, samples_b);
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("mean_std: empty sample");
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

std::pair<double, double> summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  std::vector<double> finals;
  finals.reserve(records.size());
  for (const auto& r : records) finals.push_back(r.final_objective);
  return mean_std(finals);
}

}  // namespace submodea
