#include "submodea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "submodea/algorithms.hpp"
#include "submodea/analysis.hpp"
#include "submodea/baselines.hpp"

namespace submodea {

namespace {

bool is_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '%' || c == '#';
  }
  return false;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string basename_no_ext(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

[[noreturn]] void parse_fail(const std::string& path, long long line_no, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

GraphLoadReport load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");

  GraphLoadReport report;
  report.path = path;

  bool matrix_market = false;
  bool dims_pending = false;
  long long declared_nodes = 0;

  std::vector<std::pair<long long, long long>> raw_edges;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("%%MatrixMarket", 0) == 0) {
      matrix_market = true;
      dims_pending = true;
      continue;
    }
    if (is_blank(line) || is_comment(line)) continue;

    std::istringstream tokens(line);
    if (dims_pending) {
      long long rows = 0, cols = 0, nnz = 0;
      if (!(tokens >> rows >> cols >> nnz) || rows < 1)
        parse_fail(path, line_no, "malformed MatrixMarket dimensions line");
      declared_nodes = std::max(rows, cols);
      dims_pending = false;
      continue;
    }
    long long u = 0, v = 0;
    if (!(tokens >> u >> v)) parse_fail(path, line_no, "expected two node ids");
    double weight = 0;  // optional third column, ignored
    tokens >> weight;
    (void)weight;
    if (matrix_market) {
      if (u < 1 || v < 1 || u > declared_nodes || v > declared_nodes)
        parse_fail(path, line_no, "node id outside declared range");
    } else if (u < 0 || v < 0) {
      parse_fail(path, line_no, "negative node id");
    }
    raw_edges.emplace_back(u, v);
    ++report.parsed_edges;
  }

  int n = 0;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw_edges.size());
  if (matrix_market) {
    if (declared_nodes < 1) throw std::runtime_error(path + ": missing MatrixMarket dimensions");
    n = static_cast<int>(declared_nodes);
    for (const auto& [u, v] : raw_edges)
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  } else {
    std::vector<long long> ids;
    ids.reserve(raw_edges.size() * 2);
    for (const auto& [u, v] : raw_edges) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    n = static_cast<int>(ids.size());
    auto dense = [&](long long id) {
      return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (const auto& [u, v] : raw_edges) edges.emplace_back(dense(u), dense(v));
  }
  if (n == 0) throw std::runtime_error(path + ": empty graph");

  // Canonicalize, then count what deduplication drops.
  std::vector<std::pair<int, int>> canonical;
  canonical.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) {
      ++report.self_loops;
      continue;
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  report.duplicate_edges =
      report.parsed_edges - report.self_loops - static_cast<long long>(canonical.size());
  report.edge_count = static_cast<long long>(canonical.size());

  report.graph = CoverageInstanceData::from_edges(n, canonical, basename_no_ext(path));
  return report;
}

namespace {

struct RunOutcome {
  std::uint64_t seed = 0;
  double final_objective = 0;
  double final_cost = 0;
  long long evaluations = 0;
};

struct RunTask {
  std::size_t cell = 0;
  std::size_t algo = 0;
  int rep = 0;
};

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBMOD_EA_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string format_budget(double b) {
  if (b == std::floor(b) && std::abs(b) < 1e15) {
    return std::to_string(static_cast<long long>(b));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", b);
  return buf;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

StatsTable run_experiment(const ExperimentPlan& plan) {
  if (plan.repetitions < 1) throw std::invalid_argument("run_experiment: repetitions must be >= 1");
  if (plan.algorithms.empty()) throw std::invalid_argument("run_experiment: no algorithms");
  for (const auto& a : plan.algorithms)
    if (a != "opoa" && a != "opla" && a != "gsemo" && a != "greedy")
      throw std::invalid_argument("run_experiment: unknown algorithm '" + a + "'");
  if (plan.t_max_values.empty()) throw std::invalid_argument("run_experiment: no t_max values");

  const GraphLoadReport loaded = load_graph(plan.graph_path);
  const int n = loaded.graph.n;

  StatsTable table;
  table.algorithms = plan.algorithms;

  std::vector<double> budgets = plan.budgets;
  if (budgets.empty()) {
    const auto grid = budget_grid(n);
    budgets.assign(grid.begin(), grid.end());
    std::set<double> distinct(budgets.begin(), budgets.end());
    if (distinct.size() < budgets.size())
      table.warnings.push_back("budget grid for n = " + std::to_string(n) +
                               " contains duplicate budgets");
  }
  double max_budget = 0;
  for (double b : budgets) {
    if (b <= 0) throw std::invalid_argument("run_experiment: budgets must be positive");
    max_budget = std::max(max_budget, b);
  }
  for (long long t : plan.t_max_values)
    if (t < static_cast<long long>(std::ceil(max_budget)))
      throw std::invalid_argument("run_experiment: t_max below the largest budget");

  const bool has_opla =
      std::find(plan.algorithms.begin(), plan.algorithms.end(), "opla") != plan.algorithms.end();
  if (has_opla)
    for (double b : budgets)
      if (b != std::floor(b))
        throw std::invalid_argument("run_experiment: opla needs integer budgets");
  if (has_opla && plan.cost_mode == CostMode::Random)
    table.warnings.push_back(
        "opla under non-uniform costs: the budget-incrementing (1+lambda)-EA has no "
        "approximation guarantee in this regime and is known to stall on knapsack-style "
        "instances; results are reported as-is");

  auto objective = std::make_shared<CoverageObjective>(loaded.graph);
  std::shared_ptr<const CostFunction> shared_cost;
  if (plan.cost_mode == CostMode::Uniform) {
    shared_cost = std::make_shared<LinearCost>(LinearCost::uniform(n));
  } else {
    // One cost draw per plan, shared across every cell; domain-separated
    // from the run seeds so run 0 does not replay the cost stream.
    RandomSource cost_rng(plan.base_seed ^ 0x636f737473ull /* "costs" */);
    shared_cost = std::make_shared<LinearCost>(make_random_costs(n, cost_rng));
  }

  struct Cell {
    double budget;
    long long t_max;
  };
  std::vector<Cell> cells;
  for (double b : budgets)
    for (long long t : plan.t_max_values) cells.push_back({b, t});
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return x.budget != y.budget ? x.budget < y.budget : x.t_max < y.t_max;
  });

  std::vector<RunTask> tasks;
  tasks.reserve(cells.size() * plan.algorithms.size() * static_cast<std::size_t>(plan.repetitions));
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai)
      for (int rep = 0; rep < plan.repetitions; ++rep) tasks.push_back({ci, ai, rep});

  std::vector<RunOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure_message;
  std::mutex failure_mutex;

  auto execute = [&](const RunTask& task) {
    const Cell& cell = cells[task.cell];
    const std::string& algo = plan.algorithms[task.algo];
    const std::uint64_t seed = plan.base_seed + static_cast<std::uint64_t>(task.rep);
    Instance inst(objective, shared_cost, cell.budget);
    RunOutcome out;
    out.seed = seed;
    if (algo == "opla") {
      OnePlusLambdaConfig cfg;
      cfg.budget = static_cast<int>(std::llround(cell.budget));
      if (static_cast<double>(cfg.budget) != cell.budget)
        throw std::invalid_argument("run_experiment: opla needs an integer budget");
      cfg.offspring_per_epoch = static_cast<long long>(std::floor(
          static_cast<double>(cell.t_max) / cell.budget));
      cfg.mutation = plan.mutation;
      cfg.seed = seed;
      const RunRecord rec = run_one_plus_lambda(inst, cfg);
      out = {seed, rec.final_objective, rec.final_cost, rec.evaluations_used};
      if (rec.evaluations_used > cell.t_max)
        throw internal_error("run_experiment: opla exceeded its evaluation budget");
    } else if (algo == "opoa") {
      ArchiveConfig cfg{cell.t_max, cell.budget, plan.mutation, seed};
      const RunRecord rec = run_one_plus_one_archive(inst, cfg);
      out = {seed, rec.final_objective, rec.final_cost, rec.evaluations_used};
      if (rec.evaluations_used > cell.t_max)
        throw internal_error("run_experiment: opoa exceeded its evaluation budget");
    } else if (algo == "gsemo") {
      const RunRecord rec = run_gsemo(inst, cell.t_max, seed);
      out = {seed, rec.final_objective, rec.final_cost, rec.evaluations_used};
    } else {  // greedy: deterministic, rerun per repetition only in name
      Solution g = greedy(inst);
      out = {seed, *g.cached_objective(), *g.cached_cost(), 0};
    }
    outcomes[task.cell * plan.algorithms.size() * static_cast<std::size_t>(plan.repetitions) +
             task.algo * static_cast<std::size_t>(plan.repetitions) +
             static_cast<std::size_t>(task.rep)] = out;
  };

  // Greedy is deterministic; compute each cell once and fan the result out.
  std::vector<RunTask> work;
  work.reserve(tasks.size());
  std::vector<RunTask> greedy_tasks;
  for (const auto& t : tasks) {
    if (plan.algorithms[t.algo] == "greedy") {
      if (t.rep == 0) greedy_tasks.push_back(t);
    } else {
      work.push_back(t);
    }
  }

  const int jobs = std::min<int>(resolve_jobs(plan.jobs), static_cast<int>(work.size()) + 1);
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size() || failed.load()) break;
      try {
        execute(work[i]);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        if (failure_message.empty()) failure_message = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) throw internal_error("run_experiment: " + failure_message);

  for (const auto& gt : greedy_tasks) {
    execute(gt);
    const std::size_t base =
        gt.cell * plan.algorithms.size() * static_cast<std::size_t>(plan.repetitions) +
        gt.algo * static_cast<std::size_t>(plan.repetitions);
    for (int rep = 1; rep < plan.repetitions; ++rep) {
      outcomes[base + static_cast<std::size_t>(rep)] = outcomes[base];
      outcomes[base + static_cast<std::size_t>(rep)].seed =
          plan.base_seed + static_cast<std::uint64_t>(rep);
    }
  }

  // Aggregate in canonical (budget, t_max, algorithm, repetition) order so
  // the output does not depend on scheduling.
  const auto idx_opoa = std::find(plan.algorithms.begin(), plan.algorithms.end(), "opoa");
  const auto idx_opla = std::find(plan.algorithms.begin(), plan.algorithms.end(), "opla");
  const bool pair_eas = idx_opoa != plan.algorithms.end() && idx_opla != plan.algorithms.end();

  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    StatsRow row;
    row.graph = loaded.graph.graph_name;
    row.budget = cells[ci].budget;
    row.max_evaluations = cells[ci].t_max;
    std::vector<std::vector<double>> finals(plan.algorithms.size());
    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
      finals[ai].reserve(static_cast<std::size_t>(plan.repetitions));
      for (int rep = 0; rep < plan.repetitions; ++rep) {
        const RunOutcome& out =
            outcomes[ci * plan.algorithms.size() * static_cast<std::size_t>(plan.repetitions) +
                     ai * static_cast<std::size_t>(plan.repetitions) +
                     static_cast<std::size_t>(rep)];
        finals[ai].push_back(out.final_objective);
        std::ostringstream dump;
        dump << out.seed << ',' << plan.algorithms[ai] << ',' << format_budget(cells[ci].budget)
             << ',' << cells[ci].t_max << ',' << format_fixed(out.final_objective, 6) << ','
             << format_fixed(out.final_cost, 6) << ',' << out.evaluations;
        table.dump_lines.push_back(dump.str());
      }
      row.stats.push_back(mean_std(finals[ai]));
    }
    if (plan.repetitions >= 2) {
      if (pair_eas) {
        row.p_value = rank_sum_test(
            finals[static_cast<std::size_t>(idx_opoa - plan.algorithms.begin())],
            finals[static_cast<std::size_t>(idx_opla - plan.algorithms.begin())]);
      } else if (plan.algorithms.size() >= 2) {
        row.p_value = rank_sum_test(finals[0], finals[1]);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_table(const StatsTable& table, TableFormat format) {
  if (table.rows.empty()) throw std::invalid_argument("emit_table: empty table");

  bool any_p = false;
  for (const auto& row : table.rows) any_p = any_p || row.p_value.has_value();

  std::vector<std::string> header = {"graph", "B", "t_max"};
  for (const auto& a : table.algorithms) {
    header.push_back(a + "_mean");
    header.push_back(a + "_std");
  }
  if (any_p) header.push_back("p_value");

  std::vector<std::vector<std::string>> body;
  for (const auto& row : table.rows) {
    std::vector<std::string> fields = {row.graph, format_budget(row.budget),
                                       std::to_string(row.max_evaluations)};
    for (const auto& [mean, sd] : row.stats) {
      fields.push_back(std::to_string(std::llround(mean)));
      fields.push_back(format_fixed(sd, 3));
    }
    if (any_p) fields.push_back(row.p_value ? format_fixed(*row.p_value, 3) : "");
    body.push_back(std::move(fields));
  }

  std::ostringstream out;
  if (format == TableFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "," : "") << csv_escape(header[i]);
    out << '\n';
    for (const auto& fields : body) {
      for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "," : "") << csv_escape(fields[i]);
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& fields : body)
    for (std::size_t i = 0; i < fields.size(); ++i) width[i] = std::max(width[i], fields[i].size());

  auto pad = [&](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  if (format == TableFormat::Text) {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "  " : "") << pad(header[i], width[i]);
    out << '\n';
    for (const auto& fields : body) {
      for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "  " : "") << pad(fields[i], width[i]);
      out << '\n';
    }
    return out.str();
  }

  // Markdown
  out << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << ' ' << pad(header[i], width[i]) << " |";
  out << '\n' << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << ' ' << std::string(width[i], '-') << " |";
  out << '\n';
  for (const auto& fields : body) {
    out << '|';
    for (std::size_t i = 0; i < fields.size(); ++i) out << ' ' << pad(fields[i], width[i]) << " |";
    out << '\n';
  }
  return out.str();
}

}  // namespace submodea
