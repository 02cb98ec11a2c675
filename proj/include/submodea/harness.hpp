#ifndef SUBMODEA_HARNESS_HPP
#define SUBMODEA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submodea/mutation.hpp"
#include "submodea/problems.hpp"

namespace submodea {

/// Parsed graph plus ingestion bookkeeping. Node ids are remapped to a dense
/// [0, n): MatrixMarket files keep their declared node count (isolated nodes
/// included, ids shifted to 0-based), plain edge lists take n from the sorted
/// distinct ids that appear.
struct GraphLoadReport {
  CoverageInstanceData graph;
  std::string path;
  long long parsed_edges = 0;     // edge lines accepted
  long long duplicate_edges = 0;  // dropped after symmetrization
  long long self_loops = 0;       // dropped
  long long edge_count = 0;       // undirected edges kept
};

/// Reads whitespace-separated edge lists; lines starting with '%' or '#' are
/// comments; a MatrixMarket header makes the first data line the dimensions
/// line. A third numeric column (edge weight) is ignored. Unparseable input
/// raises an error naming the line; so does an empty graph.
GraphLoadReport load_graph(const std::string& path);

enum class CostMode { Uniform, Random };

struct ExperimentPlan {
  std::string graph_path;
  CostMode cost_mode = CostMode::Uniform;
  std::vector<double> budgets;  // empty means budget_grid(n)
  std::vector<long long> t_max_values = {100000, 500000, 1000000};
  int repetitions = 30;
  std::vector<std::string> algorithms = {"opoa", "opla"};  // opoa|opla|gsemo|greedy
  std::uint64_t base_seed = 1;
  MutationKind mutation = MutationKind::StandardBitPlus;
  int jobs = 0;  // 0: SUBMOD_EA_JOBS env var, else hardware concurrency
};

struct StatsRow {
  std::string graph;
  double budget = 0;
  long long max_evaluations = 0;
  std::vector<std::pair<double, double>> stats;  // (mean, std) per algorithm
  std::optional<double> p_value;                 // rank-sum between the two EAs
};

/// Aggregated experiment output. Rows are sorted by (graph, budget, t_max);
/// dump_lines carries the raw per-run records (seed, algorithm, budget,
/// t_max, final objective, final cost, evaluations), one line per run.
struct StatsTable {
  std::vector<std::string> algorithms;  // column order
  std::vector<StatsRow> rows;
  std::vector<std::string> dump_lines;
  std::vector<std::string> warnings;
};

/// Executes the full plan: every (budget, t_max, algorithm) cell for
/// `repetitions` seeded runs. Run seeds are base_seed + repetition index;
/// random costs are drawn once per plan and shared by all cells. The
/// (1+lambda)-EA receives lambda = floor(t_max / B) so that its
/// B * lambda offspring evaluations match the evaluation budget of the
/// other algorithms. Deterministic: identical plans produce identical
/// tables byte for byte, independent of the job count.
StatsTable run_experiment(const ExperimentPlan& plan);

enum class TableFormat { Csv, Text, Markdown };

/// Renders the table: means rounded to integers, standard deviations and
/// p-values to three decimals. The p-value column is omitted entirely when
/// no row carries one (e.g. a single repetition).
std::string emit_table(const StatsTable& table, TableFormat format);

}  // namespace submodea

#endif  // SUBMODEA_HARNESS_HPP
