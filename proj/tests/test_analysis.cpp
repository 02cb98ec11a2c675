#include <doctest.h>

#include <cmath>

#include "submodea/analysis.hpp"
#include "submodea/problems.hpp"
#include "test_helpers.hpp"

using namespace submodea;
using namespace submodea::testing;

TEST_CASE("submodularity ratio is exactly one for coverage and modular objectives") {
  RandomSource rng(14);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = 8 + 2 * trial;  // 8, 10, 12
    const CoverageObjective obj(random_graph(n, rng.uniform(0.15, 0.4), rng));
    const SubmodularityReport report = submodularity_ratio(obj);
    REQUIRE(report.alpha.has_value());
    CHECK(*report.alpha == 1.0);
  }

  // Saturated marginals (zero gain at the large set, positive at the small
  // one) are ordinary diminishing-returns cases; here the leaf's gain
  // vanishes once the center is chosen. They must be skipped, not treated
  // as ratio zero, or alpha would not be 1 for this submodular objective.
  const CoverageObjective star(make_star(4));
  const SubmodularityReport star_report = submodularity_ratio(star);
  REQUIRE(star_report.alpha.has_value());
  CHECK(*star_report.alpha == 1.0);
  CHECK(star_report.unbounded_triples > 0);

  const LinearObjective linear(KnapsackCounterexample(12, 4096).profits());
  const SubmodularityReport lin = submodularity_ratio(linear);
  REQUIRE(lin.alpha.has_value());
  CHECK(*lin.alpha == 1.0);
}

TEST_CASE("submodularity ratio of |X|^2 matches the enumeration oracle") {
  const SquaredCardinality obj(3);
  const SubmodularityReport report = submodularity_ratio(obj);

  // Oracle: marginal of adding one element to a set of size k is 2k + 1, so
  // the ratio over X subset of Y, v outside Y is (2|X|+1) / (2|Y|+1),
  // minimized at |X| = 0, |Y| = n - 1.
  double oracle = 1.0;
  for (int small = 0; small < 3; ++small)
    for (int large = small; large < 3; ++large)
      oracle = std::min(oracle, (2.0 * small + 1.0) / (2.0 * large + 1.0));
  CHECK(oracle == 0.2);

  REQUIRE(report.alpha.has_value());
  CHECK(*report.alpha == 0.2);
  CHECK(report.witness_small.count() == 0);
  CHECK(report.witness_large.count() == 2);

  Instance too_big(std::make_shared<ZeroObjective>(15),
                   std::make_shared<LinearCost>(LinearCost::uniform(15)), 1.0);
  CHECK_THROWS_AS(submodularity_ratio(*too_big.objective), std::invalid_argument);
}

namespace {

// 0 on the empty set, 1 otherwise: creates zero-denominator pairs whose
// numerator is positive, which the ratio must skip but report.
struct StepObjective : ObjectiveFunction {
  int n() const override { return 3; }
  double evaluate(const BitString& x) const override { return x.any() ? 1.0 : 0.0; }
};

}  // namespace

TEST_CASE("zero-denominator pairs are skipped and surfaced") {
  const StepObjective obj;
  const SubmodularityReport report = submodularity_ratio(obj);
  REQUIRE(report.alpha.has_value());
  CHECK(*report.alpha == 1.0);  // X = Y pairs still constrain the minimum to 1
  CHECK(report.unbounded_triples > 0);
}

TEST_CASE("marginal-gain bound: identical sets, star pair, and exhaustive sweep") {
  const CoverageObjective star(make_star(4));

  Solution center(5);
  center.set(0);
  const auto same = check_marginal_gain_bound(star, center, center);
  CHECK(same.holds);
  CHECK(same.slack == 0.0);
  CHECK(same.delta == 0.0);
  CHECK(same.r == 1);
  CHECK_FALSE(same.monotonicity_violation);

  // x covers {leaf, center} (value 2); adding the center covers the other
  // three leaves, so delta = 3 and the bound is tight: 5 <= 2 + 1 * 3.
  Solution leaf(5);
  leaf.set(1);
  const auto pair = check_marginal_gain_bound(star, center, leaf);
  CHECK(pair.holds);
  CHECK(pair.delta == 3.0);
  CHECK(pair.r == 1);
  CHECK(pair.slack == 0.0);

  RandomSource rng(33);
  for (int instance = 0; instance < 3; ++instance) {
    const int n = 7 + instance;
    const CoverageObjective obj(random_graph(n, 0.3, rng));
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t xs = 0; xs < subsets; ++xs) {
      for (std::uint64_t x = 0; x < subsets; ++x) {
        const auto res = check_marginal_gain_bound(obj, Solution(BitString::from_mask(n, xs)),
                                                   Solution(BitString::from_mask(n, x)));
        CHECK(res.holds);
        CHECK_FALSE(res.monotonicity_violation);
      }
    }
  }
}

namespace {

// 1 on the empty set, 0 otherwise: deliberately non-monotone.
struct AntiObjective : ObjectiveFunction {
  int n() const override { return 3; }
  double evaluate(const BitString& x) const override { return x.any() ? 0.0 : 1.0; }
};

}  // namespace

TEST_CASE("marginal-gain bound flags non-monotone comparands") {
  const AntiObjective obj;
  Solution x(3);
  x.set(0);
  const auto res = check_marginal_gain_bound(obj, Solution(3), x);  // x_star = empty set
  CHECK(res.monotonicity_violation);
  CHECK_FALSE(res.holds);
}

TEST_CASE("rank-sum test: knowns and the exact example") {
  CHECK(rank_sum_test({1, 1, 1}, {1, 1, 1}) == 1.0);
  CHECK(rank_sum_test({1, 2, 3}, {4, 5, 6}) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(rank_sum_test({}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(rank_sum_test({1.0}, {}), std::invalid_argument);

  // Same distribution, large samples: should not reject.
  RandomSource rng(91);
  std::vector<double> a, b;
  for (int i = 0; i < 30; ++i) {
    a.push_back(rng.next_double());
    b.push_back(rng.next_double());
  }
  CHECK(rank_sum_test(a, b) > 0.05);
}

TEST_CASE("exact and normal modes agree at the boundary sample size") {
  RandomSource rng(123);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a, b;
    const double shift = rng.uniform(0.0, 0.8);
    for (int i = 0; i < 10; ++i) {
      a.push_back(rng.next_double());
      b.push_back(rng.next_double() + shift);
    }
    const double exact = rank_sum_test_exact(a, b);
    const double normal = rank_sum_test_normal(a, b);
    worst = std::max(worst, std::abs(exact - normal));
  }
  CHECK(worst <= 0.02);
}

TEST_CASE("null calibration: rejection rate near the nominal level") {
  RandomSource rng(2024);
  int rejections = 0;
  const int pairs = 300;
  for (int trial = 0; trial < pairs; ++trial) {
    std::vector<double> a, b;
    for (int i = 0; i < 30; ++i) {
      a.push_back(rng.next_double());
      b.push_back(rng.next_double());
    }
    if (rank_sum_test(a, b) <= 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / pairs;
  CHECK(rate >= 0.02);
  CHECK(rate <= 0.08);
}

TEST_CASE("mean and standard deviation") {
  CHECK(mean_std({222, 222, 222}) == std::pair<double, double>{222.0, 0.0});
  const auto two = mean_std({1, 3});
  CHECK(two.first == 2.0);
  CHECK(two.second == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(mean_std({7}) == std::pair<double, double>{7.0, 0.0});
  CHECK_THROWS_AS(mean_std({}), std::invalid_argument);

  const std::vector<double> thirty(30, 222.0);
  CHECK(mean_std(thirty) == std::pair<double, double>{222.0, 0.0});

  std::vector<RunRecord> records(3);
  for (int i = 0; i < 3; ++i) records[static_cast<std::size_t>(i)].final_objective = 222.0;
  CHECK(summarize(records) == std::pair<double, double>{222.0, 0.0});
  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}
