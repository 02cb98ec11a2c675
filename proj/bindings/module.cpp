#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <stdexcept>

#include "submodea/algorithms.hpp"
#include "submodea/analysis.hpp"
#include "submodea/baselines.hpp"
#include "submodea/harness.hpp"
#include "submodea/problems.hpp"

namespace py = pybind11;
using namespace submodea;

namespace {

MutationKind parse_mutation(const std::string& name) {
  if (name == "standard") return MutationKind::StandardBit;
  if (name == "plus") return MutationKind::StandardBitPlus;
  throw std::invalid_argument("mutation must be 'standard' or 'plus'");
}

CostMode parse_cost_mode(const std::string& name) {
  if (name == "uniform") return CostMode::Uniform;
  if (name == "random") return CostMode::Random;
  throw std::invalid_argument("cost must be 'uniform' or 'random'");
}

Solution solution_from_indices(int n, const std::vector<int>& indices) {
  return Solution(BitString::from_indices(n, indices));
}

py::dict record_to_dict(const RunRecord& rec) {
  py::dict d;
  d["algorithm"] = rec.config.algorithm;
  d["seed"] = rec.config.seed;
  d["evaluations"] = rec.evaluations_used;
  d["objective"] = rec.final_objective;
  d["cost"] = rec.final_cost;
  d["selected"] = rec.final_solution.bits().to_indices();
  py::list per_budget;
  for (const auto& bb : rec.per_budget_best)
    per_budget.append(py::make_tuple(bb.bound, bb.objective, bb.cost,
                                     bb.solution.bits().to_indices()));
  d["per_budget_best"] = per_budget;
  py::list per_epoch;
  for (const auto& es : rec.per_epoch_best)
    per_epoch.append(py::make_tuple(es.bound, es.best_objective, es.best_cost));
  d["per_epoch_best"] = per_epoch;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-objective evolutionary algorithms for constrained submodular "
            "maximization: budget-incrementing (1+lambda)-EA, (1+1)-EA with archive, "
            "baselines, and the benchmark harness.";

  py::class_<Instance, std::shared_ptr<Instance>>(m, "Instance")
      .def_property_readonly("n", [](const Instance& i) { return i.n; })
      .def_property_readonly("budget", [](const Instance& i) { return i.budget; })
      .def("evaluate",
           [](const Instance& inst, const std::vector<int>& indices) {
             Solution s = solution_from_indices(inst.n, indices);
             const auto [f, c] = evaluate_cached(inst, s);
             return py::make_tuple(f, c);
           },
           py::arg("selected"), "Objective and cost of a selection given as element indices.");

  m.def(
      "coverage_instance",
      [](const std::string& graph_path, double budget, const std::string& cost,
         std::uint64_t cost_seed) {
        const GraphLoadReport loaded = load_graph(graph_path);
        auto objective = std::make_shared<CoverageObjective>(loaded.graph);
        std::shared_ptr<const CostFunction> cost_fn;
        if (parse_cost_mode(cost) == CostMode::Uniform) {
          cost_fn = std::make_shared<LinearCost>(LinearCost::uniform(loaded.graph.n));
        } else {
          RandomSource rng(cost_seed);
          cost_fn = std::make_shared<LinearCost>(make_random_costs(loaded.graph.n, rng));
        }
        return std::make_shared<Instance>(objective, cost_fn, budget);
      },
      py::arg("graph_path"), py::arg("budget"), py::arg("cost") = "uniform",
      py::arg("cost_seed") = 0,
      "Max-coverage instance from an edge-list or MatrixMarket file.");

  m.def(
      "coverage_instance_from_edges",
      [](int n, const std::vector<std::pair<int, int>>& edges, double budget,
         const std::vector<double>& weights) {
        auto objective = std::make_shared<CoverageObjective>(
            CoverageInstanceData::from_edges(n, edges, "edges"));
        auto cost_fn = weights.empty()
                           ? std::make_shared<LinearCost>(LinearCost::uniform(n))
                           : std::make_shared<LinearCost>(weights);
        return std::make_shared<Instance>(objective, cost_fn, budget);
      },
      py::arg("n"), py::arg("edges"), py::arg("budget"),
      py::arg("cost_weights") = std::vector<double>{},
      "Max-coverage instance from an explicit edge list (uniform cost unless weights given).");

  m.def(
      "knapsack_instance",
      [](int n, double large_profit) {
        const KnapsackCounterexample kc(n, large_profit);
        return std::make_shared<Instance>(kc.make_instance());
      },
      py::arg("n"), py::arg("large_profit") = 0.0,
      "Knapsack family (unit items plus one heavy high-profit item, budget n-1) on which "
      "budget-incrementing selection without an archive stalls.");

  m.def("budget_grid", [](int n) {
    const auto grid = budget_grid(n);
    return std::vector<int>(grid.begin(), grid.end());
  });
  m.def("single_bit_flip_probability", &single_bit_flip_probability, py::arg("n"));

  m.def(
      "one_plus_lambda_parameters",
      [](int n, int r) {
        const auto p = one_plus_lambda_parameters(n, r);
        return py::make_tuple(p.offspring_per_epoch, p.max_evaluations);
      },
      py::arg("n"), py::arg("r"),
      "(lambda, t_max) under which the (1+lambda)-EA carries its uniform-constraint guarantee.");

  m.def(
      "archive_parameters",
      [](int n, int budget, bool per_budget) {
        const auto s = archive_parameters(n, budget, per_budget);
        return py::make_tuple(s.epoch_length, s.max_evaluations);
      },
      py::arg("n"), py::arg("budget"), py::arg("per_budget") = true,
      "(epoch_length, t_max) under which the archive variant carries its guarantee.");

  m.def(
      "run_one_plus_lambda",
      [](std::shared_ptr<Instance> inst, long long offspring, int budget,
         const std::string& mutation, std::uint64_t seed) {
        OnePlusLambdaConfig cfg{offspring, budget, parse_mutation(mutation), seed};
        return record_to_dict(run_one_plus_lambda(*inst, cfg));
      },
      py::arg("instance"), py::arg("offspring_per_epoch"), py::arg("budget"),
      py::arg("mutation") = "plus", py::arg("seed") = 0);

  m.def(
      "run_one_plus_one_archive",
      [](std::shared_ptr<Instance> inst, long long max_evaluations, double budget,
         const std::string& mutation, std::uint64_t seed) {
        ArchiveConfig cfg{max_evaluations, budget, parse_mutation(mutation), seed};
        return record_to_dict(run_one_plus_one_archive(*inst, cfg));
      },
      py::arg("instance"), py::arg("max_evaluations"), py::arg("budget"),
      py::arg("mutation") = "plus", py::arg("seed") = 0);

  m.def(
      "run_gsemo",
      [](std::shared_ptr<Instance> inst, long long max_evaluations, std::uint64_t seed) {
        return record_to_dict(run_gsemo(*inst, max_evaluations, seed));
      },
      py::arg("instance"), py::arg("max_evaluations"), py::arg("seed") = 0);

  m.def(
      "greedy",
      [](std::shared_ptr<Instance> inst) {
        const Solution g = greedy(*inst);
        py::dict d;
        d["selected"] = g.bits().to_indices();
        d["objective"] = *g.cached_objective();
        d["cost"] = *g.cached_cost();
        return d;
      },
      py::arg("instance"),
      "Generalized greedy (gain per cost, plus best-singleton fallback).");

  m.def(
      "brute_force",
      [](std::shared_ptr<Instance> inst, const std::vector<double>& budgets) {
        const OracleResult result = brute_force(*inst, budgets);
        py::dict d;
        for (const auto& [budget, entry] : result.per_budget_opt)
          d[py::float_(budget)] =
              py::make_tuple(entry.value, entry.witness.bits().to_indices());
        return d;
      },
      py::arg("instance"), py::arg("budgets"),
      "Exhaustive per-budget optimum (n <= 24): budget -> (value, witness indices).");

  m.def("rank_sum_test", &rank_sum_test, py::arg("samples_a"), py::arg("samples_b"),
        "Two-sided Mann-Whitney U p-value (exact for combined size <= 20).");
  m.def("mean_std", &mean_std, py::arg("values"));

  m.def(
      "submodularity_ratio",
      [](std::shared_ptr<Instance> inst) {
        const SubmodularityReport report = submodularity_ratio(*inst->objective);
        py::dict d;
        d["alpha"] = report.alpha ? py::cast(*report.alpha) : py::none();
        d["triples_checked"] = report.triples_checked;
        d["unbounded_triples"] = report.unbounded_triples;
        if (report.alpha) {
          d["witness"] = py::make_tuple(report.witness_small.to_indices(),
                                        report.witness_large.to_indices(),
                                        report.witness_element);
        }
        return d;
      },
      py::arg("instance"), "Exact submodularity ratio of the instance objective (n <= 14).");

  m.def(
      "run_experiment",
      [](const std::string& graph_path, const std::string& cost, std::vector<double> budgets,
         std::vector<long long> t_max, int reps, std::vector<std::string> algos,
         std::uint64_t seed, const std::string& mutation, int jobs, const std::string& format) {
        ExperimentPlan plan;
        plan.graph_path = graph_path;
        plan.cost_mode = parse_cost_mode(cost);
        plan.budgets = std::move(budgets);
        if (!t_max.empty()) plan.t_max_values = std::move(t_max);
        plan.repetitions = reps;
        if (!algos.empty()) plan.algorithms = std::move(algos);
        plan.base_seed = seed;
        plan.mutation = parse_mutation(mutation);
        plan.jobs = jobs;
        const StatsTable table = run_experiment(plan);
        TableFormat fmt = TableFormat::Csv;
        if (format == "text") fmt = TableFormat::Text;
        else if (format == "markdown") fmt = TableFormat::Markdown;
        else if (format != "csv") throw std::invalid_argument("format must be csv|text|markdown");
        py::dict d;
        d["rendered"] = emit_table(table, fmt);
        d["dump"] = table.dump_lines;
        d["warnings"] = table.warnings;
        py::list rows;
        for (const auto& row : table.rows) {
          py::dict r;
          r["graph"] = row.graph;
          r["B"] = row.budget;
          r["t_max"] = row.max_evaluations;
          py::dict stats;
          for (std::size_t i = 0; i < table.algorithms.size(); ++i)
            stats[py::str(table.algorithms[i])] =
                py::make_tuple(row.stats[i].first, row.stats[i].second);
          r["stats"] = stats;
          r["p_value"] = row.p_value ? py::cast(*row.p_value) : py::none();
          rows.append(r);
        }
        d["rows"] = rows;
        return d;
      },
      py::arg("graph_path"), py::arg("cost") = "uniform",
      py::arg("budgets") = std::vector<double>{}, py::arg("t_max") = std::vector<long long>{},
      py::arg("reps") = 30, py::arg("algos") = std::vector<std::string>{},
      py::arg("seed") = 1, py::arg("mutation") = "plus", py::arg("jobs") = 0,
      py::arg("format") = "csv",
      "Full benchmark grid; returns the rendered table plus per-cell statistics.");

  m.def(
      "load_graph_info",
      [](const std::string& path) {
        const GraphLoadReport report = load_graph(path);
        py::dict d;
        d["name"] = report.graph.graph_name;
        d["n"] = report.graph.n;
        d["edges"] = report.edge_count;
        d["duplicates"] = report.duplicate_edges;
        d["self_loops"] = report.self_loops;
        return d;
      },
      py::arg("path"));

#ifdef VERSION_INFO
#define SUBMODEA_STR(x) #x
#define SUBMODEA_XSTR(x) SUBMODEA_STR(x)
  m.attr("__version__") = SUBMODEA_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
