#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "submodea/analysis.hpp"
#include "submodea/harness.hpp"
#include "test_helpers.hpp"

using namespace submodea;
using namespace submodea::testing;

namespace {

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string random_graph_file_content(int n, double edge_prob, std::uint64_t seed) {
  RandomSource rng(seed);
  const auto g = random_graph(n, edge_prob, rng);
  std::ostringstream out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[static_cast<std::size_t>(u)])
      if (u < v) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("edge list loading: plain, duplicates, comments") {
  TempFile path_graph("submodea_path.edges", "0 1\n1 2\n");
  const GraphLoadReport path = load_graph(path_graph.path());
  CHECK(path.graph.n == 3);
  CHECK(path.edge_count == 2);
  CHECK(path.graph.adjacency[1] == std::vector<int>{0, 2});

  TempFile dup("submodea_dup.edges", "0 1\n1 0\n");
  const GraphLoadReport d = load_graph(dup.path());
  CHECK(d.graph.n == 2);
  CHECK(d.edge_count == 1);
  CHECK(d.duplicate_edges == 1);

  TempFile commented("submodea_comments.edges",
                     "% a comment\n# another\n\n3 4\n4 5 0.25\n");
  const GraphLoadReport c = load_graph(commented.path());
  CHECK(c.graph.n == 3);  // ids 3, 4, 5 compacted
  CHECK(c.edge_count == 2);

  TempFile loops("submodea_loops.edges", "0 0\n0 1\n");
  const GraphLoadReport l = load_graph(loops.path());
  CHECK(l.self_loops == 1);
  CHECK(l.edge_count == 1);
}

TEST_CASE("matrix market loading keeps the declared node count") {
  TempFile mm("submodea_mm.mtx",
              "%%MatrixMarket matrix coordinate pattern symmetric\n"
              "% network comment\n"
              "7 7 3\n"
              "1 2\n"
              "2 3\n"
              "5 4\n");
  const GraphLoadReport g = load_graph(mm.path());
  CHECK(g.graph.n == 7);  // isolated nodes 6 and 7 retained
  CHECK(g.edge_count == 3);
  CHECK(g.graph.adjacency[0] == std::vector<int>{1});
  CHECK(g.graph.adjacency[4] == std::vector<int>{3});

  TempFile out_of_range("submodea_mm_bad.mtx",
                        "%%MatrixMarket matrix coordinate pattern symmetric\n"
                        "3 3 1\n"
                        "1 9\n");
  CHECK_THROWS_WITH_AS(load_graph(out_of_range.path()),
                       doctest::Contains(":3:"), std::runtime_error);
}

TEST_CASE("graph loading errors carry line numbers") {
  TempFile bad("submodea_bad.edges", "0 1\n1 2\nfoo bar\n");
  CHECK_THROWS_WITH_AS(load_graph(bad.path()), doctest::Contains(":3:"), std::runtime_error);

  TempFile empty("submodea_empty.edges", "% nothing here\n");
  CHECK_THROWS_WITH_AS(load_graph(empty.path()), doctest::Contains("empty graph"),
                       std::runtime_error);

  CHECK_THROWS_AS(load_graph("/nonexistent/file.edges"), std::runtime_error);
}

TEST_CASE("experiment grid: stats, dump cross-check, determinism") {
  TempFile graph("submodea_grid.edges", random_graph_file_content(24, 0.18, 99));

  ExperimentPlan plan;
  plan.graph_path = graph.path();
  plan.cost_mode = CostMode::Uniform;
  plan.budgets = {2, 3};
  plan.t_max_values = {200, 400};
  plan.repetitions = 5;
  plan.algorithms = {"opoa", "opla", "gsemo", "greedy"};
  plan.base_seed = 17;
  plan.jobs = 2;

  const StatsTable table = run_experiment(plan);
  REQUIRE(table.rows.size() == 4);  // 2 budgets x 2 t_max
  CHECK(table.dump_lines.size() == 4 * 4 * 5);

  // Rows sorted by (budget, t_max).
  CHECK(table.rows[0].budget == 2.0);
  CHECK(table.rows[0].max_evaluations == 200);
  CHECK(table.rows[3].budget == 3.0);
  CHECK(table.rows[3].max_evaluations == 400);

  // Every mean is the mean of exactly `repetitions` dump entries.
  std::map<std::string, std::vector<double>> by_cell;
  for (const auto& line : table.dump_lines) {
    std::stringstream ss(line);
    std::string seed, algo, b, tmax, f, c, evals;
    std::getline(ss, seed, ',');
    std::getline(ss, algo, ',');
    std::getline(ss, b, ',');
    std::getline(ss, tmax, ',');
    std::getline(ss, f, ',');
    std::getline(ss, c, ',');
    std::getline(ss, evals, ',');
    by_cell[algo + "|" + b + "|" + tmax].push_back(std::stod(f));

    // The (1+lambda)-EA consumes exactly budget * floor(t_max / budget)
    // evaluations, within the cell's evaluation budget.
    if (algo == "opla") {
      const long long budget = std::stoll(b);
      const long long cell_tmax = std::stoll(tmax);
      CHECK(std::stoll(evals) == budget * (cell_tmax / budget));
    }
    if (algo == "opoa") CHECK(std::stoll(evals) == std::stoll(tmax));
  }
  for (const auto& [key, finals] : by_cell) CHECK(finals.size() == 5);
  for (std::size_t ri = 0; ri < table.rows.size(); ++ri) {
    for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
      std::ostringstream key;
      key << table.algorithms[ai] << "|" << table.rows[ri].budget << "|"
          << table.rows[ri].max_evaluations;
      const auto stats = mean_std(by_cell.at(key.str()));
      CHECK(table.rows[ri].stats[ai].first == doctest::Approx(stats.first).epsilon(1e-12));
    }
  }

  // Identical plan, identical bytes; the job count must not matter.
  const std::string csv = emit_table(table, TableFormat::Csv);
  ExperimentPlan serial = plan;
  serial.jobs = 1;
  const StatsTable rerun = run_experiment(serial);
  CHECK(emit_table(rerun, TableFormat::Csv) == csv);
  CHECK(rerun.dump_lines == table.dump_lines);
}

TEST_CASE("experiment plan validation and warnings") {
  TempFile graph("submodea_val.edges", random_graph_file_content(24, 0.2, 5));

  ExperimentPlan plan;
  plan.graph_path = graph.path();
  plan.budgets = {3};
  plan.t_max_values = {100};
  plan.repetitions = 2;
  plan.algorithms = {"opoa", "opla"};

  ExperimentPlan bad_algo = plan;
  bad_algo.algorithms = {"simulated-annealing"};
  CHECK_THROWS_AS(run_experiment(bad_algo), std::invalid_argument);

  ExperimentPlan tiny_budget = plan;
  tiny_budget.t_max_values = {2};
  CHECK_THROWS_AS(run_experiment(tiny_budget), std::invalid_argument);

  ExperimentPlan no_reps = plan;
  no_reps.repetitions = 0;
  CHECK_THROWS_AS(run_experiment(no_reps), std::invalid_argument);

  ExperimentPlan fractional = plan;
  fractional.budgets = {2.5};
  CHECK_THROWS_AS(run_experiment(fractional), std::invalid_argument);

  ExperimentPlan random_opla = plan;
  random_opla.cost_mode = CostMode::Random;
  const StatsTable t = run_experiment(random_opla);
  bool warned = false;
  for (const auto& w : t.warnings) warned = warned || w.find("opla") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("random costs are drawn once per plan, not per cell") {
  TempFile graph("submodea_costs.edges", random_graph_file_content(24, 0.2, 8));
  ExperimentPlan plan;
  plan.graph_path = graph.path();
  plan.cost_mode = CostMode::Random;
  plan.budgets = {2};
  plan.t_max_values = {150};
  plan.repetitions = 3;
  plan.algorithms = {"opoa"};
  plan.base_seed = 13;

  // Extending the grid must not change the cost draw, so the shared cell's
  // per-run results stay identical line for line.
  const StatsTable narrow = run_experiment(plan);
  plan.budgets = {2, 3};
  plan.t_max_values = {150, 250};
  const StatsTable wide = run_experiment(plan);
  for (const auto& line : narrow.dump_lines) {
    CHECK(std::find(wide.dump_lines.begin(), wide.dump_lines.end(), line) !=
          wide.dump_lines.end());
  }
}

TEST_CASE("single repetition suppresses the p-value column") {
  TempFile graph("submodea_single.edges", random_graph_file_content(22, 0.2, 3));
  ExperimentPlan plan;
  plan.graph_path = graph.path();
  plan.budgets = {2};
  plan.t_max_values = {100};
  plan.repetitions = 1;
  plan.algorithms = {"opoa", "opla"};
  const StatsTable table = run_experiment(plan);
  CHECK_FALSE(table.rows[0].p_value.has_value());
  for (const auto& [mean, sd] : table.rows[0].stats) CHECK(sd == 0.0);
  const std::string csv = emit_table(table, TableFormat::Csv);
  CHECK(csv.find("p_value") == std::string::npos);
}

TEST_CASE("table rendering in all three formats") {
  StatsTable table;
  table.algorithms = {"opoa", "opla"};
  StatsRow row;
  row.graph = "g";
  row.budget = 10;
  row.max_evaluations = 100000;
  row.stats = {{222.0, 0.0}, {222.0, 0.0}};
  row.p_value = 1.0;
  table.rows.push_back(row);

  const std::string text = emit_table(table, TableFormat::Text);
  CHECK(text.find("222") != std::string::npos);
  CHECK(text.find("0.000") != std::string::npos);
  CHECK(text.find("1.000") != std::string::npos);

  const std::string csv = emit_table(table, TableFormat::Csv);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "graph,B,t_max,opoa_mean,opoa_std,opla_mean,opla_std,p_value");
  CHECK(csv.find("g,10,100000,222,0.000,222,0.000,1.000") != std::string::npos);

  const std::string md = emit_table(table, TableFormat::Markdown);
  CHECK(md.find("| g") != std::string::npos);
  CHECK(md.find("| ---") != std::string::npos);

  // Means round to integers: 221.6 prints as 222.
  table.rows[0].stats[0].first = 221.6;
  CHECK(emit_table(table, TableFormat::Csv).find(",222,") != std::string::npos);

  // RFC-4180 quoting when a field contains the delimiter.
  table.rows[0].graph = "a,b";
  CHECK(emit_table(table, TableFormat::Csv).find("\"a,b\"") != std::string::npos);

  CHECK_THROWS_AS(emit_table(StatsTable{}, TableFormat::Csv), std::invalid_argument);
}
