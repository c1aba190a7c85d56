#ifndef STATSP_STA_HPP
#define STATSP_STA_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "statsp/operators.hpp"
#include "statsp/run_result.hpp"
#include "statsp/tsplib.hpp"

namespace statsp {

struct StaConfig {
  int se = 20;          // search enforcement: candidates per operator phase
  int max_iters = 200;  // outer iterations
  OperatorParams params;
  std::uint64_t seed = 0;
};

using MoveSampler = std::function<Move(int n, Rng& rng)>;

/// One operator phase: draws `se` candidate moves from the incumbent (all
/// independent, none chained), evaluates each, and returns the best
/// candidate if it is strictly better than the incumbent, otherwise the
/// incumbent unchanged. Adds exactly `se` to eval_count.
std::pair<Tour, double> operator_phase(const Tour& incumbent, double incumbent_length,
                                       const MoveSampler& sampler, int se,
                                       const DistanceMatrix& dmat, Rng& rng,
                                       std::uint64_t& eval_count);

/// Discrete STA main loop: from a random tour, runs max_iters iterations of
/// a swap phase, a shift phase and a symmetry phase, recording the incumbent
/// length after each iteration. Total fitness evaluations are exactly
/// 3*se*max_iters + 1.
RunResult sta_solve(const DistanceMatrix& dmat, const StaConfig& config);
RunResult sta_solve(const TspInstance& instance, const StaConfig& config);

}  // namespace statsp

#endif  // STATSP_STA_HPP
