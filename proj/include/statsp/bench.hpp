#ifndef STATSP_BENCH_HPP
#define STATSP_BENCH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "statsp/aco.hpp"
#include "statsp/run_result.hpp"
#include "statsp/sa.hpp"
#include "statsp/sta.hpp"
#include "statsp/tsplib.hpp"

namespace statsp {

enum class SolverKind { Sta, Sa, Aco };

const char* solver_name(SolverKind kind);
std::optional<SolverKind> solver_from_string(std::string_view text);

/// A solver selection plus the full configuration of each backend; only the
/// one matching `kind` is consulted.
struct SolverSpec {
  SolverKind kind = SolverKind::Sta;
  StaConfig sta;
  SaConfig sa;
  AcoConfig aco;
};

/// Runs the selected solver with the given per-trial seed.
RunResult run_solver(const SolverSpec& spec, const TspInstance& instance, std::uint64_t seed);

/// Effective configuration of the selected solver, echoed into artifacts.
nlohmann::json solver_config_json(const SolverSpec& spec);

struct TrialRecord {
  int trial = 0;  // 0-based index
  std::uint64_t seed = 0;
  double best_length = 0.0;
  Tour best_tour;
  double wall_time = 0.0;
  std::vector<double> trace;
  std::string error;  // non-empty iff the trial failed

  bool failed() const { return !error.empty(); }
};

struct BenchReport {
  std::string solver;
  std::string instance;
  nlohmann::json config;
  std::vector<TrialRecord> trials;  // ordered by trial index
  int failed_trials = 0;
  // Statistics over the successful trials; stdev uses the sample (n-1)
  // convention.
  double best = 0.0;
  double mean = 0.0;
  double worst = 0.0;
  double stdev = 0.0;
  double mean_time = 0.0;
  std::vector<double> avg_trace;  // per-iteration mean of best-so-far
};

using SolverFn = std::function<RunResult(const TspInstance&, std::uint64_t seed)>;

/// Runs n_trials independent trials. Trial i always uses
/// trial_seed(master_seed, i), so the report does not depend on execution
/// order; `execution_order` (default 0..n-1) only schedules the work.
/// Failed trials are recorded and excluded from the statistics. Throws if
/// every trial fails.
BenchReport run_trials(const std::string& label, const SolverFn& solver,
                       const nlohmann::json& config_echo, const TspInstance& instance,
                       int n_trials, std::uint64_t master_seed,
                       const std::vector<int>& execution_order = {});

BenchReport run_trials(const SolverSpec& spec, const TspInstance& instance, int n_trials,
                       std::uint64_t master_seed);

/// Uniform subsampling of a length-L series to length target <= L:
/// output[j] = trace[ceil(j*L/target)] in 1-based terms, so the final point
/// is preserved. Throws if target > L or target < 1.
std::vector<double> condense_trace(const std::vector<double>& trace, int target);

/// Convergence check |f(x_k) - reference| <= epsilon for all k > horizon.
struct ConvergenceCriterion {
  double epsilon = 0.0;
  double reference = 0.0;  // f(x*), supplied externally
  int horizon = 0;         // N; iterations are 1-based
};

struct ConvergenceResult {
  bool converged = true;
  int first_violation = 0;  // 1-based iteration, 0 when converged
};

ConvergenceResult check_convergence(const std::vector<double>& trace,
                                    const ConvergenceCriterion& criterion);

/// Full report: config echo, per-trial records and aggregate statistics.
nlohmann::json report_to_json(const BenchReport& report);

/// CSV with header "iteration,<label>_avg_fitness".
void write_trace_csv(std::ostream& out, const std::string& label,
                     const std::vector<double>& trace);

/// Text table with one column per report and the rows
/// best / mean / worst / st.dev. / time(s).
std::string render_stats_table(const std::vector<BenchReport>& reports);

}  // namespace statsp

#endif  // STATSP_BENCH_HPP
