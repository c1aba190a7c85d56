#include "statsp/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace statsp {
namespace {

std::string format_stat(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Sta: return "sta";
    case SolverKind::Sa: return "sa";
    case SolverKind::Aco: return "aco";
  }
  return "?";
}

std::optional<SolverKind> solver_from_string(std::string_view text) {
  if (text == "sta" || text == "STA") return SolverKind::Sta;
  if (text == "sa" || text == "SA") return SolverKind::Sa;
  if (text == "aco" || text == "ACO") return SolverKind::Aco;
  return std::nullopt;
}

RunResult run_solver(const SolverSpec& spec, const TspInstance& instance, std::uint64_t seed) {
  switch (spec.kind) {
    case SolverKind::Sta: {
      StaConfig config = spec.sta;
      config.seed = seed;
      return sta_solve(instance, config);
    }
    case SolverKind::Sa: {
      SaConfig config = spec.sa;
      config.seed = seed;
      return sa_solve(instance, config);
    }
    case SolverKind::Aco: {
      AcoConfig config = spec.aco;
      config.seed = seed;
      return aco_solve(instance, config);
    }
  }
  throw std::logic_error("run_solver: unknown solver kind");
}

nlohmann::json solver_config_json(const SolverSpec& spec) {
  switch (spec.kind) {
    case SolverKind::Sta:
      return {{"solver", "sta"},
              {"se", spec.sta.se},
              {"max_iters", spec.sta.max_iters},
              {"swap_factor", spec.sta.params.swap_factor},
              {"shift_factor", spec.sta.params.shift_factor},
              {"symmetry_factor", spec.sta.params.symmetry_factor},
              {"resample_identity_swaps", spec.sta.params.resample_identity_swaps}};
    case SolverKind::Sa:
      return {{"solver", "sa"},
              {"initial_temperature", spec.sa.initial_temperature},
              {"cooling", spec.sa.cooling},
              {"iters", spec.sa.iters}};
    case SolverKind::Aco:
      return {{"solver", "aco"},
              {"alpha", spec.aco.alpha},
              {"beta", spec.aco.beta},
              {"rho", spec.aco.rho},
              {"ants", spec.aco.ants},
              {"iters", spec.aco.iters}};
  }
  throw std::logic_error("solver_config_json: unknown solver kind");
}

BenchReport run_trials(const std::string& label, const SolverFn& solver,
                       const nlohmann::json& config_echo, const TspInstance& instance,
                       int n_trials, std::uint64_t master_seed,
                       const std::vector<int>& execution_order) {
  if (n_trials < 1) throw std::invalid_argument("run_trials: n_trials must be at least 1");

  std::vector<int> order = execution_order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n_trials));
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n_trials) {
    throw std::invalid_argument("run_trials: execution order must list every trial once");
  }

  const DistanceMatrix dmat = build_distance_matrix(instance);
  BenchReport report;
  report.solver = label;
  report.instance = instance.name;
  report.config = config_echo;
  report.trials.resize(static_cast<std::size_t>(n_trials));

  for (int trial : order) {
    if (trial < 0 || trial >= n_trials) {
      throw std::invalid_argument("run_trials: execution order index out of range");
    }
    TrialRecord& record = report.trials[static_cast<std::size_t>(trial)];
    record.trial = trial;
    record.seed = trial_seed(master_seed, trial);
    const auto start = std::chrono::steady_clock::now();
    try {
      RunResult run = solver(instance, record.seed);
      record.best_tour = std::move(run.best_tour);
      record.trace = std::move(run.trace);
      // Reported lengths re-derive from the stored tour, never from solver
      // bookkeeping.
      record.best_length = tour_length(record.best_tour, dmat);
      if (record.best_length != run.best_length) {
        throw std::runtime_error("solver best_length does not match its tour");
      }
    } catch (const std::exception& err) {
      record.error = err.what();
    }
    record.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  // Aggregation is a fold over trial index, independent of execution order.
  double sum = 0.0;
  double time_sum = 0.0;
  int ok_count = 0;
  for (const TrialRecord& record : report.trials) {
    if (record.failed()) {
      ++report.failed_trials;
      continue;
    }
    if (ok_count == 0) {
      report.best = record.best_length;
      report.worst = record.best_length;
    } else {
      report.best = std::min(report.best, record.best_length);
      report.worst = std::max(report.worst, record.best_length);
    }
    sum += record.best_length;
    time_sum += record.wall_time;
    ++ok_count;
  }
  if (ok_count == 0) {
    throw std::runtime_error("run_trials: every trial failed; first error: " +
                             report.trials.front().error);
  }
  report.mean = sum / ok_count;
  report.mean_time = time_sum / ok_count;
  double sq_sum = 0.0;
  for (const TrialRecord& record : report.trials) {
    if (record.failed()) continue;
    const double dev = record.best_length - report.mean;
    sq_sum += dev * dev;
  }
  report.stdev = ok_count > 1 ? std::sqrt(sq_sum / (ok_count - 1)) : 0.0;

  std::size_t trace_len = 0;
  for (const TrialRecord& record : report.trials) {
    if (!record.failed()) trace_len = std::max(trace_len, record.trace.size());
  }
  report.avg_trace.assign(trace_len, 0.0);
  for (const TrialRecord& record : report.trials) {
    if (record.failed()) continue;
    if (record.trace.size() != trace_len) {
      throw std::runtime_error("run_trials: trials produced traces of different lengths");
    }
    for (std::size_t k = 0; k < trace_len; ++k) report.avg_trace[k] += record.trace[k];
  }
  for (double& v : report.avg_trace) v /= ok_count;
  return report;
}

BenchReport run_trials(const SolverSpec& spec, const TspInstance& instance, int n_trials,
                       std::uint64_t master_seed) {
  const SolverFn solver = [&spec](const TspInstance& inst, std::uint64_t seed) {
    return run_solver(spec, inst, seed);
  };
  return run_trials(solver_name(spec.kind), solver, solver_config_json(spec), instance, n_trials,
                    master_seed);
}

std::vector<double> condense_trace(const std::vector<double>& trace, int target) {
  const std::size_t length = trace.size();
  if (target < 1 || static_cast<std::size_t>(target) > length) {
    throw std::invalid_argument("condense_trace: target must be in 1..trace length");
  }
  std::vector<double> out(static_cast<std::size_t>(target));
  for (std::size_t j = 1; j <= static_cast<std::size_t>(target); ++j) {
    const std::size_t pick = (j * length + static_cast<std::size_t>(target) - 1) /
                             static_cast<std::size_t>(target);  // ceil(j*L/T)
    out[j - 1] = trace[pick - 1];
  }
  return out;
}

ConvergenceResult check_convergence(const std::vector<double>& trace,
                                    const ConvergenceCriterion& criterion) {
  for (std::size_t k = static_cast<std::size_t>(std::max(criterion.horizon, 0)) + 1;
       k <= trace.size(); ++k) {
    if (std::abs(trace[k - 1] - criterion.reference) > criterion.epsilon) {
      return {false, static_cast<int>(k)};
    }
  }
  return {true, 0};
}

nlohmann::json report_to_json(const BenchReport& report) {
  nlohmann::json trials = nlohmann::json::array();
  for (const TrialRecord& record : report.trials) {
    nlohmann::json entry = {
        {"trial", record.trial},
        {"seed", record.seed},
    };
    if (record.failed()) {
      entry["error"] = record.error;
    } else {
      entry["best_length"] = record.best_length;
      entry["best_tour"] = record.best_tour.order;
      entry["trace"] = record.trace;
    }
    entry["wall_time"] = record.wall_time;
    trials.push_back(std::move(entry));
  }
  return {
      {"solver", report.solver},
      {"instance", report.instance},
      {"config", report.config},
      {"trials", trials},
      {"failed_trials", report.failed_trials},
      {"stats",
       {{"best", report.best},
        {"mean", report.mean},
        {"worst", report.worst},
        {"stdev", report.stdev},
        {"stdev_convention", "sample (n-1)"},
        {"mean_time", report.mean_time}}},
      {"avg_trace", report.avg_trace},
  };
}

void write_trace_csv(std::ostream& out, const std::string& label,
                     const std::vector<double>& trace) {
  out << "iteration," << label << "_avg_fitness\n";
  char buf[64];
  for (std::size_t k = 0; k < trace.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.10g\n", k + 1, trace[k]);
    out << buf;
  }
}

std::string render_stats_table(const std::vector<BenchReport>& reports) {
  static const char* kRows[] = {"best", "mean", "worse", "st.dev.", "time(s)"};
  std::ostringstream out;
  out << "Performance";
  for (const BenchReport& report : reports) out << '\t' << report.solver;
  out << '\n';
  for (int row = 0; row < 5; ++row) {
    out << kRows[row];
    for (const BenchReport& report : reports) {
      double value = 0.0;
      switch (row) {
        case 0: value = report.best; break;
        case 1: value = report.mean; break;
        case 2: value = report.worst; break;
        case 3: value = report.stdev; break;
        case 4: value = report.mean_time; break;
      }
      out << '\t' << format_stat(value);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace statsp
