#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "statsp/bench.hpp"
#include "statsp/tsplib.hpp"

namespace {

using statsp::BenchReport;
using statsp::Metric;
using statsp::SolverKind;
using statsp::SolverSpec;
using statsp::TspInstance;

struct Options {
  std::string instance_path;
  std::string solver = "sta";
  std::vector<std::string> solvers;
  std::string metric = "raw";
  std::string out_dir = "out";
  int trials = 20;
  std::optional<std::uint64_t> seed;
  // Solver overrides; defaults follow the benchmark configuration.
  int se = 20;
  std::optional<int> iters;
  int swap_factor = 2;
  int shift_factor = 1;
  int symmetry_factor = 0;
  bool no_identity_swaps = false;
  double t0 = 5000.0;
  double cooling = 0.97;
  double alpha = 1.0;
  double beta = 5.0;
  double rho = 0.9;
  int ants = 20;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--instance", opt.instance_path, "TSPLIB instance file")->required();
  cmd->add_option("--metric", opt.metric, "distance convention: raw, euc2d, geo, att")
      ->check(CLI::IsMember({"raw", "euc2d", "geo", "att"}));
  cmd->add_option("--seed", opt.seed, "master random seed (default: drawn from system entropy)");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--se", opt.se, "STA search enforcement (candidates per phase)");
  cmd->add_option("--iters", opt.iters, "iteration count override for the selected solvers");
  cmd->add_option("--ma", opt.swap_factor, "STA swap factor");
  cmd->add_option("--mb", opt.shift_factor, "STA shift factor");
  cmd->add_option("--mc", opt.symmetry_factor, "STA symmetry factor");
  cmd->add_flag("--no-identity-swaps", opt.no_identity_swaps,
                "resample swap transformations that fix the tour");
  cmd->add_option("--t0", opt.t0, "SA initial temperature");
  cmd->add_option("--cooling", opt.cooling, "SA geometric cooling rate");
  cmd->add_option("--alpha", opt.alpha, "ACO pheromone weight");
  cmd->add_option("--beta", opt.beta, "ACO heuristic weight");
  cmd->add_option("--rho", opt.rho, "ACO pheromone persistence");
  cmd->add_option("--ants", opt.ants, "ACO colony size");
}

SolverSpec make_spec(SolverKind kind, const Options& opt) {
  SolverSpec spec;
  spec.kind = kind;
  spec.sta.se = opt.se;
  spec.sta.params.swap_factor = opt.swap_factor;
  spec.sta.params.shift_factor = opt.shift_factor;
  spec.sta.params.symmetry_factor = opt.symmetry_factor;
  spec.sta.params.resample_identity_swaps = opt.no_identity_swaps;
  spec.sa.initial_temperature = opt.t0;
  spec.sa.cooling = opt.cooling;
  spec.aco.alpha = opt.alpha;
  spec.aco.beta = opt.beta;
  spec.aco.rho = opt.rho;
  spec.aco.ants = opt.ants;
  if (opt.iters) {
    spec.sta.max_iters = *opt.iters;
    spec.sa.iters = *opt.iters;
    spec.aco.iters = *opt.iters;
  }
  return spec;
}

TspInstance load_with_metric(const Options& opt) {
  TspInstance instance = statsp::load_instance(opt.instance_path);
  const Metric requested = *statsp::metric_from_string(opt.metric);
  if (requested != Metric::RawEuc && requested != instance.declared_metric) {
    throw std::runtime_error(std::string("metric ") + statsp::metric_name(requested) +
                             " does not match the file's EDGE_WEIGHT_TYPE " +
                             statsp::metric_name(instance.declared_metric));
  }
  instance.active_metric = requested;
  return instance;
}

std::uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  std::random_device entropy;
  return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

std::string instance_stem(const Options& opt) {
  return std::filesystem::path(opt.instance_path).stem().string();
}

nlohmann::json instance_json(const TspInstance& instance, const Options& opt) {
  return {{"name", instance.name},
          {"path", opt.instance_path},
          {"n", instance.n},
          {"declared_metric", statsp::metric_name(instance.declared_metric)},
          {"active_metric", statsp::metric_name(instance.active_metric)}};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  out << contents;
  if (!out) throw std::runtime_error("failed to write " + path.string());
}

std::vector<SolverKind> parse_solver_list(const std::vector<std::string>& names) {
  std::vector<SolverKind> kinds;
  std::set<std::string> seen;
  for (const std::string& name : names) {
    const auto kind = statsp::solver_from_string(name);
    if (!kind) throw std::runtime_error("unknown solver: " + name);
    if (!seen.insert(name).second) throw std::runtime_error("solver listed twice: " + name);
    kinds.push_back(*kind);
  }
  return kinds;
}

int cmd_solve(const Options& opt) {
  const TspInstance instance = load_with_metric(opt);
  const auto kind = statsp::solver_from_string(opt.solver);
  if (!kind) throw std::runtime_error("unknown solver: " + opt.solver);
  SolverSpec spec = make_spec(*kind, opt);
  const std::uint64_t seed = resolve_seed(opt);

  const statsp::RunResult run = statsp::run_solver(spec, instance, seed);

  std::filesystem::create_directories(opt.out_dir);
  const std::string stem = instance_stem(opt);
  const std::string base = std::string("solve_") + statsp::solver_name(*kind) + "_" + stem;
  const std::filesystem::path json_path = std::filesystem::path(opt.out_dir) / (base + ".json");
  const std::filesystem::path csv_path =
      std::filesystem::path(opt.out_dir) / (base + "_trace.csv");

  nlohmann::json config = statsp::solver_config_json(spec);
  config["seed"] = seed;
  const nlohmann::json artifact = {{"command", "solve"},
                                   {"instance", instance_json(instance, opt)},
                                   {"config", config},
                                   {"best_length", run.best_length},
                                   {"best_tour", run.best_tour.order},
                                   {"eval_count", run.eval_count},
                                   {"trace_csv", csv_path.filename().string()}};
  write_file(json_path, artifact.dump(2) + "\n");

  std::ostringstream csv;
  statsp::write_trace_csv(csv, statsp::solver_name(*kind), run.trace);
  write_file(csv_path, csv.str());

  std::cout << statsp::solver_name(*kind) << " on " << stem << ": best " << run.best_length
            << ", evals " << run.eval_count << ", " << run.wall_time << "s -> "
            << json_path.string() << "\n";
  return 0;
}

int cmd_bench(const Options& opt) {
  if (opt.trials < 1) throw std::runtime_error("--trials must be at least 1");
  const TspInstance instance = load_with_metric(opt);
  const std::vector<SolverKind> kinds = parse_solver_list(opt.solvers);
  if (kinds.empty()) throw std::runtime_error("no solvers selected");
  const std::uint64_t seed = resolve_seed(opt);

  std::filesystem::create_directories(opt.out_dir);
  const std::string stem = instance_stem(opt);
  std::vector<BenchReport> reports;
  for (const SolverKind kind : kinds) {
    SolverSpec spec = make_spec(kind, opt);
    BenchReport report = statsp::run_trials(spec, instance, opt.trials, seed);
    nlohmann::json doc = statsp::report_to_json(report);
    doc["instance"] = instance_json(instance, opt);
    doc["trials_requested"] = opt.trials;
    doc["master_seed"] = seed;
    const std::filesystem::path path =
        std::filesystem::path(opt.out_dir) /
        (std::string("bench_") + statsp::solver_name(kind) + "_" + stem + ".json");
    write_file(path, doc.dump(2) + "\n");
    if (report.failed_trials > 0) {
      std::cerr << "warning: " << report.failed_trials << " of " << opt.trials << " "
                << statsp::solver_name(kind) << " trials failed\n";
    }
    reports.push_back(std::move(report));
  }

  const std::string table = statsp::render_stats_table(reports);
  const std::filesystem::path table_path =
      std::filesystem::path(opt.out_dir) / ("bench_" + stem + "_table.txt");
  write_file(table_path, table);
  std::cout << stem << " (" << opt.trials << " trials, seed " << seed << ")\n" << table;
  return 0;
}

int cmd_compare(const Options& opt) {
  if (opt.trials < 1) throw std::runtime_error("--trials must be at least 1");
  const TspInstance instance = load_with_metric(opt);
  const std::vector<SolverKind> kinds = parse_solver_list(opt.solvers);
  if (kinds.size() < 2) throw std::runtime_error("compare needs at least 2 solvers");
  const std::uint64_t seed = resolve_seed(opt);

  std::vector<BenchReport> reports;
  std::size_t target = 0;
  for (const SolverKind kind : kinds) {
    SolverSpec spec = make_spec(kind, opt);
    reports.push_back(statsp::run_trials(spec, instance, opt.trials, seed));
    const std::size_t len = reports.back().avg_trace.size();
    target = target == 0 ? len : std::min(target, len);
  }

  std::filesystem::create_directories(opt.out_dir);
  const std::string stem = instance_stem(opt);
  std::ostringstream csv;
  csv << "iteration";
  std::vector<std::vector<double>> columns;
  for (const BenchReport& report : reports) {
    csv << "," << report.solver;
    columns.push_back(statsp::condense_trace(report.avg_trace, static_cast<int>(target)));
  }
  csv << "\n";
  char buf[64];
  for (std::size_t row = 0; row < target; ++row) {
    csv << row + 1;
    for (const auto& column : columns) {
      std::snprintf(buf, sizeof(buf), ",%.10g", column[row]);
      csv << buf;
    }
    csv << "\n";
  }
  const std::filesystem::path path =
      std::filesystem::path(opt.out_dir) / ("compare_" + stem + ".csv");
  write_file(path, csv.str());
  std::cout << "wrote " << path.string() << " (" << target << " iterations, seed " << seed
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete state transition algorithm TSP solver and benchmark harness"};
  app.require_subcommand(1);

  Options solve_opt;
  Options bench_opt;
  Options compare_opt;

  CLI::App* solve = app.add_subcommand("solve", "run one solver once and write its best tour");
  add_common_flags(solve, solve_opt);
  solve->add_option("--solver", solve_opt.solver, "solver: sta, sa or aco")
      ->check(CLI::IsMember({"sta", "sa", "aco"}));

  CLI::App* bench = app.add_subcommand("bench", "run seeded trials and write per-solver reports");
  add_common_flags(bench, bench_opt);
  bench->add_option("--solvers", bench_opt.solvers, "comma-separated solver list")
      ->delimiter(',')
      ->required();
  bench->add_option("--trials", bench_opt.trials, "independent trials per solver");

  CLI::App* compare =
      app.add_subcommand("compare", "merge average convergence traces into one CSV");
  add_common_flags(compare, compare_opt);
  compare->add_option("--solvers", compare_opt.solvers, "comma-separated solver list")
      ->delimiter(',')
      ->required();
  compare->add_option("--trials", compare_opt.trials, "independent trials per solver");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(solve_opt);
    if (bench->parsed()) return cmd_bench(bench_opt);
    if (compare->parsed()) return cmd_compare(compare_opt);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
