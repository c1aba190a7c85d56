#ifndef STATSP_SA_HPP
#define STATSP_SA_HPP

#include <cstdint>

#include "statsp/run_result.hpp"
#include "statsp/tsplib.hpp"

namespace statsp {

struct SaConfig {
  double initial_temperature = 5000.0;
  double cooling = 0.97;  // geometric rate applied once per iteration
  int iters = 4000;
  std::uint64_t seed = 0;
};

/// Metropolis rule: 1 for an improvement, exp(-delta/temperature) otherwise.
double sa_accept_probability(double delta, double temperature);

/// Simulated annealing baseline. Neighborhood is a single random
/// position-pair swap. trace holds the best-so-far series; raw_trace the
/// oscillating current length.
RunResult sa_solve(const DistanceMatrix& dmat, const SaConfig& config);
RunResult sa_solve(const TspInstance& instance, const SaConfig& config);

}  // namespace statsp

#endif  // STATSP_SA_HPP
