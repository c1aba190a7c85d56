#include "statsp/sta.hpp"

#include <chrono>
#include <stdexcept>

namespace statsp {

std::pair<Tour, double> operator_phase(const Tour& incumbent, double incumbent_length,
                                       const MoveSampler& sampler, int se,
                                       const DistanceMatrix& dmat, Rng& rng,
                                       std::uint64_t& eval_count) {
  if (se < 1) throw std::invalid_argument("operator_phase: se must be at least 1");
  const int n = incumbent.size();
  Tour best_candidate;
  double best_length = 0.0;
  bool have_candidate = false;
  for (int i = 0; i < se; ++i) {
    Tour candidate = apply_move(incumbent, sampler(n, rng));
    const double length = tour_length(candidate, dmat);
    ++eval_count;
    if (!have_candidate || length < best_length) {
      best_candidate = std::move(candidate);
      best_length = length;
      have_candidate = true;
    }
  }
  // Greedy criterion: only a strictly better candidate replaces the incumbent.
  if (best_length < incumbent_length) {
    return {std::move(best_candidate), best_length};
  }
  return {incumbent, incumbent_length};
}

RunResult sta_solve(const DistanceMatrix& dmat, const StaConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const int n = dmat.size();
  if (config.se < 1) throw std::invalid_argument("sta_solve: se must be at least 1");
  if (config.max_iters < 1) throw std::invalid_argument("sta_solve: max_iters must be at least 1");
  validate_params(config.params, n);

  const OperatorParams& params = config.params;
  const MoveSampler swap_sampler = [&params](int size, Rng& rng) {
    return sample_swap(size, params.swap_factor, rng, params.resample_identity_swaps);
  };
  const MoveSampler shift_sampler = [&params](int size, Rng& rng) {
    return sample_shift(size, params.shift_factor, rng);
  };
  const MoveSampler symmetry_sampler = [&params](int size, Rng& rng) {
    return sample_symmetry(size, params.symmetry_factor, rng);
  };

  Rng rng(config.seed);
  RunResult result;
  Tour incumbent = random_tour(n, rng);
  double incumbent_length = tour_length(incumbent, dmat);
  result.eval_count = 1;
  result.trace.reserve(static_cast<std::size_t>(config.max_iters));

  for (int iter = 0; iter < config.max_iters; ++iter) {
    std::tie(incumbent, incumbent_length) = operator_phase(
        incumbent, incumbent_length, swap_sampler, config.se, dmat, rng, result.eval_count);
    std::tie(incumbent, incumbent_length) = operator_phase(
        incumbent, incumbent_length, shift_sampler, config.se, dmat, rng, result.eval_count);
    std::tie(incumbent, incumbent_length) = operator_phase(
        incumbent, incumbent_length, symmetry_sampler, config.se, dmat, rng, result.eval_count);
    result.trace.push_back(incumbent_length);
  }

  result.best_tour = std::move(incumbent);
  result.best_length = incumbent_length;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult sta_solve(const TspInstance& instance, const StaConfig& config) {
  return sta_solve(build_distance_matrix(instance), config);
}

}  // namespace statsp
