// submodea: benchmark harness for single-objective evolutionary algorithms on
// constrained submodular maximization (graph max coverage).
//
// Subcommands:
//   run            execute an experiment grid and emit a stats table
//   oracle         exhaustive per-budget optimum of a small instance
//   check          structural property suite on a loaded instance
//   counterexample knapsack regression separating the two algorithms
//
// Exit codes: 0 success, 1 usage error, 2 input parse error,
//             3 internal invariant breach.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "submodea/algorithms.hpp"
#include "submodea/analysis.hpp"
#include "submodea/baselines.hpp"
#include "submodea/harness.hpp"
#include "submodea/problems.hpp"

using namespace submodea;

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

MutationKind parse_mutation(const std::string& name) {
  if (name == "standard") return MutationKind::StandardBit;
  if (name == "plus") return MutationKind::StandardBitPlus;
  throw CLI::ValidationError("--mutation", "expected standard|plus");
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "text") return TableFormat::Text;
  if (name == "markdown") return TableFormat::Markdown;
  throw CLI::ValidationError("--format", "expected csv|text|markdown");
}

void write_or_print(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << content;
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Plan files mirror the run flags, one `key=value` per line; '#' starts a
/// comment. Explicit command-line flags take precedence over plan values.
std::map<std::string, std::string> read_plan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open plan file");
  std::map<std::string, std::string> plan;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trimmed(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--plan", path + ":" + std::to_string(line_no) +
                                               ": expected key=value");
    const std::string key = trimmed(text.substr(0, eq));
    static const std::set<std::string> known = {"graph", "cost", "budgets", "tmax", "reps",
                                                "seed",  "algos", "mutation", "format", "out",
                                                "dump",  "jobs"};
    if (!known.count(key))
      throw CLI::ValidationError("--plan", path + ":" + std::to_string(line_no) +
                                               ": unknown key '" + key + "'");
    plan[key] = trimmed(text.substr(eq + 1));
  }
  return plan;
}

int cmd_run(const std::string& graph, const std::string& cost, const std::string& budgets,
            const std::string& tmax, int reps, std::uint64_t seed, const std::string& algos,
            const std::string& mutation, const std::string& format, const std::string& out_path,
            const std::string& dump_path, int jobs) {
  ExperimentPlan plan;
  plan.graph_path = graph;
  if (cost == "uniform")
    plan.cost_mode = CostMode::Uniform;
  else if (cost == "random")
    plan.cost_mode = CostMode::Random;
  else
    throw CLI::ValidationError("--cost", "expected uniform|random");

  if (budgets != "auto") {
    plan.budgets.clear();
    for (const auto& tok : split_list(budgets)) plan.budgets.push_back(std::stod(tok));
    if (plan.budgets.empty()) throw CLI::ValidationError("--budgets", "empty budget list");
  }
  if (!tmax.empty()) {
    plan.t_max_values.clear();
    for (const auto& tok : split_list(tmax)) plan.t_max_values.push_back(std::stoll(tok));
  }
  plan.repetitions = reps;
  plan.base_seed = seed;
  if (!algos.empty()) plan.algorithms = split_list(algos);
  plan.mutation = parse_mutation(mutation);
  plan.jobs = jobs;

  const StatsTable table = run_experiment(plan);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";

  write_or_print(emit_table(table, parse_format(format)), out_path);

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error(dump_path + ": cannot open for writing");
    dump << "seed,algorithm,B,t_max,final_f,final_c,evaluations\n";
    for (const auto& line : table.dump_lines) dump << line << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& graph, const std::string& cost, std::uint64_t seed,
               const std::string& budgets) {
  const GraphLoadReport loaded = load_graph(graph);
  auto objective = std::make_shared<CoverageObjective>(loaded.graph);
  std::shared_ptr<const CostFunction> cost_fn;
  if (cost == "uniform") {
    cost_fn = std::make_shared<LinearCost>(LinearCost::uniform(loaded.graph.n));
  } else if (cost == "random") {
    RandomSource rng(seed ^ 0x636f737473ull);
    cost_fn = std::make_shared<LinearCost>(make_random_costs(loaded.graph.n, rng));
  } else {
    throw CLI::ValidationError("--cost", "expected uniform|random");
  }

  std::vector<double> budget_list;
  if (budgets == "auto") {
    const auto grid = budget_grid(loaded.graph.n);
    budget_list.assign(grid.begin(), grid.end());
  } else {
    for (const auto& tok : split_list(budgets)) budget_list.push_back(std::stod(tok));
  }
  if (budget_list.empty()) throw CLI::ValidationError("--budgets", "empty budget list");

  double max_budget = budget_list[0];
  for (double b : budget_list) max_budget = std::max(max_budget, b);
  Instance inst(objective, cost_fn, max_budget);
  const OracleResult result = brute_force(inst, budget_list);

  std::cout << "graph " << loaded.graph.graph_name << ", n = " << loaded.graph.n
            << ", subsets enumerated = " << result.enumerated_count << "\n";
  for (const auto& [budget, entry] : result.per_budget_opt) {
    std::cout << "B = " << budget << ": opt = " << entry.value << ", witness = {";
    bool first = true;
    for (int i : entry.witness.bits().to_indices()) {
      std::cout << (first ? "" : ", ") << i;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_check(const std::string& graph) {
  const GraphLoadReport loaded = load_graph(graph);
  const int n = loaded.graph.n;
  std::cout << "graph " << loaded.graph.graph_name << ", n = " << n << ", edges "
            << loaded.edge_count << "\n";
  if (n > 14) {
    std::cerr << "check: n > 14; exhaustive property checks refuse instances this large\n";
    return 1;
  }

  const CoverageObjective obj(loaded.graph);
  const SubmodularityReport report = submodularity_ratio(obj);
  std::cout << "submodularity ratio: "
            << (report.alpha ? std::to_string(*report.alpha) : std::string("undefined"))
            << " over " << report.triples_checked << " triples\n";

  // f table over all subsets, then the textbook characterizations.
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<double> f(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    f[mask] = obj.evaluate(BitString::from_mask(n, mask));

  long long violations = 0;
  for (std::uint64_t a = 0; a < subsets; ++a)
    for (std::uint64_t b = 0; b < subsets; ++b)
      if (f[a | b] + f[a & b] > f[a] + f[b]) ++violations;
  std::cout << "diminishing-returns inequality (all pairs): "
            << (violations == 0 ? "ok" : std::to_string(violations) + " violations") << "\n";

  long long monotone_violations = 0;
  for (std::uint64_t a = 0; a < subsets; ++a)
    for (int v = 0; v < n; ++v)
      if (!(a & (std::uint64_t{1} << v)) && f[a | (std::uint64_t{1} << v)] < f[a])
        ++monotone_violations;
  std::cout << "monotonicity (all single-element extensions): "
            << (monotone_violations == 0 ? "ok" : std::to_string(monotone_violations) + " violations")
            << "\n";

  long long bound_violations = 0;
  for (std::uint64_t xs = 0; xs < subsets; ++xs) {
    for (std::uint64_t x = 0; x < subsets; ++x) {
      const auto res = check_marginal_gain_bound(obj, Solution(BitString::from_mask(n, xs)),
                                                 Solution(BitString::from_mask(n, x)));
      if (!res.holds || res.monotonicity_violation) ++bound_violations;
    }
  }
  std::cout << "marginal-gain bound f(S) <= f(X) + |S| * delta (all pairs): "
            << (bound_violations == 0 ? "ok" : std::to_string(bound_violations) + " violations")
            << "\n";

  return (violations || monotone_violations || bound_violations) ? 1 : 0;
}

int cmd_counterexample(int n, double large_profit, int runs, std::uint64_t seed) {
  const KnapsackCounterexample kc(n, large_profit);
  const Instance inst = kc.make_instance();
  const int budget = n - 1;
  const ArchiveSchedule schedule = archive_parameters(n, budget, true);
  const long long lambda = schedule.max_evaluations / budget;

  int archive_hits = 0, plain_hits = 0;
  for (int r = 0; r < runs; ++r) {
    ArchiveConfig acfg{schedule.max_evaluations, static_cast<double>(budget),
                       MutationKind::StandardBitPlus, seed + static_cast<std::uint64_t>(r)};
    if (run_one_plus_one_archive(inst, acfg).final_objective == kc.large_profit) ++archive_hits;

    OnePlusLambdaConfig pcfg{lambda, budget, MutationKind::StandardBitPlus,
                             seed + static_cast<std::uint64_t>(r)};
    if (run_one_plus_lambda(inst, pcfg).final_objective == kc.large_profit) ++plain_hits;
  }
  std::cout << "knapsack n = " << n << ", heavy profit = " << kc.large_profit
            << ", budget = " << budget << ", t_max = " << schedule.max_evaluations << "\n";
  std::cout << "(1+1)-EA with archive reached the optimum in " << archive_hits << "/" << runs
            << " runs\n";
  std::cout << "(1+lambda)-EA (same evaluation budget, lambda = " << lambda
            << ") reached it in " << plain_hits << "/" << runs << " runs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary algorithms for constrained submodular maximization"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Execute an experiment grid");
  std::string graph, cost = "uniform", budgets = "auto", tmax, algos, mutation = "plus";
  std::string format = "text", out_path, dump_path, plan_path;
  int reps = 30, jobs = 0;
  std::uint64_t seed = 1;
  auto* opt_graph = run->add_option("--graph", graph, "Edge-list or MatrixMarket graph file");
  auto* opt_cost =
      run->add_option("--cost", cost, "uniform|random (random: per-node cost in [0.5, 1.5])");
  auto* opt_budgets = run->add_option("--budgets", budgets,
                                      "Comma-separated budgets, or 'auto' for the n-based grid");
  auto* opt_tmax = run->add_option(
      "--tmax", tmax, "Comma-separated evaluation budgets (default 100000,500000,1000000)");
  auto* opt_reps = run->add_option("--reps", reps, "Seeded repetitions per cell");
  auto* opt_seed = run->add_option("--seed", seed, "Base seed; run r uses seed + r");
  auto* opt_algos =
      run->add_option("--algos", algos, "Comma-separated subset of opoa,opla,gsemo,greedy");
  auto* opt_mutation = run->add_option("--mutation", mutation, "standard|plus");
  auto* opt_format = run->add_option("--format", format, "csv|text|markdown");
  auto* opt_out = run->add_option("--out", out_path, "Write the table here instead of stdout");
  auto* opt_dump = run->add_option(
      "--dump", dump_path, "Write one line per run (seed, algorithm, B, t_max, ...)");
  auto* opt_jobs =
      run->add_option("--jobs", jobs, "Parallel runs (default: SUBMOD_EA_JOBS or hardware)");
  run->add_option("--plan", plan_path,
                  "Plan file with one key=value per line mirroring these flags");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive per-budget optimum (n <= 24)");
  std::string o_graph, o_cost = "uniform", o_budgets = "auto";
  std::uint64_t o_seed = 1;
  oracle->add_option("--graph", o_graph)->required();
  oracle->add_option("--cost", o_cost, "uniform|random");
  oracle->add_option("--seed", o_seed, "Seed for random costs");
  oracle->add_option("--budgets", o_budgets, "Comma-separated budgets or 'auto'");

  // check
  auto* check = app.add_subcommand("check", "Structural property suite (n <= 14)");
  std::string c_graph;
  check->add_option("--graph", c_graph)->required();

  // counterexample
  auto* ce = app.add_subcommand("counterexample", "Knapsack regression separating the algorithms");
  int ce_n = 12, ce_runs = 100;
  double ce_profit = 0;
  std::uint64_t ce_seed = 1;
  ce->add_option("--n", ce_n, "Item count (>= 3)");
  ce->add_option("--L", ce_profit, "Heavy item profit (default 2^n, capped at 2^53)");
  ce->add_option("--runs", ce_runs, "Number of seeded runs per algorithm");
  ce->add_option("--seed", ce_seed, "Base seed");

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      if (!plan_path.empty()) {
        const auto plan = read_plan_file(plan_path);
        auto apply_str = [&](const CLI::Option* opt, const char* key, std::string& target) {
          const auto it = plan.find(key);
          if (it != plan.end() && opt->count() == 0) target = it->second;
        };
        auto apply_num = [&](const CLI::Option* opt, const char* key, auto& target) {
          const auto it = plan.find(key);
          if (it == plan.end() || opt->count() > 0) return;
          std::istringstream value(it->second);
          value >> target;
          if (value.fail())
            throw CLI::ValidationError("--plan", std::string("bad value for '") + key + "'");
        };
        apply_str(opt_graph, "graph", graph);
        apply_str(opt_cost, "cost", cost);
        apply_str(opt_budgets, "budgets", budgets);
        apply_str(opt_tmax, "tmax", tmax);
        apply_num(opt_reps, "reps", reps);
        apply_num(opt_seed, "seed", seed);
        apply_str(opt_algos, "algos", algos);
        apply_str(opt_mutation, "mutation", mutation);
        apply_str(opt_format, "format", format);
        apply_str(opt_out, "out", out_path);
        apply_str(opt_dump, "dump", dump_path);
        apply_num(opt_jobs, "jobs", jobs);
      }
      if (graph.empty())
        throw CLI::RequiredError("--graph (on the command line or in the plan file)");
      return cmd_run(graph, cost, budgets, tmax, reps, seed, algos, mutation, format, out_path,
                     dump_path, jobs);
    }
    if (oracle->parsed()) return cmd_oracle(o_graph, o_cost, o_seed, o_budgets);
    if (check->parsed()) return cmd_check(c_graph);
    if (ce->parsed()) return cmd_counterexample(ce_n, ce_profit, ce_runs, ce_seed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
