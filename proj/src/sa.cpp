#include "statsp/sa.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "statsp/rng.hpp"

namespace statsp {

double sa_accept_probability(double delta, double temperature) {
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

RunResult sa_solve(const DistanceMatrix& dmat, const SaConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const int n = dmat.size();
  if (config.initial_temperature <= 0.0) {
    throw std::invalid_argument("sa_solve: initial temperature must be positive");
  }
  if (config.cooling <= 0.0 || config.cooling >= 1.0) {
    throw std::invalid_argument("sa_solve: cooling rate must be in (0, 1)");
  }
  if (config.iters < 1) throw std::invalid_argument("sa_solve: iters must be at least 1");

  Rng rng(config.seed);
  Tour current = random_tour(n, rng);
  double current_length = tour_length(current, dmat);

  RunResult result;
  result.eval_count = 1;
  result.best_tour = current;
  result.best_length = current_length;
  result.trace.reserve(static_cast<std::size_t>(config.iters));
  result.raw_trace.reserve(static_cast<std::size_t>(config.iters));

  double temperature = config.initial_temperature;
  for (int iter = 0; iter < config.iters; ++iter) {
    // Neighbor: contents of two random distinct positions exchanged.
    const int a = rng.uniform_int(0, n - 1);
    int b = rng.uniform_int(0, n - 2);
    if (b >= a) ++b;
    Tour neighbor = current;
    std::swap(neighbor.order[static_cast<std::size_t>(a)],
              neighbor.order[static_cast<std::size_t>(b)]);
    const double neighbor_length = tour_length(neighbor, dmat);
    ++result.eval_count;

    const double delta = neighbor_length - current_length;
    if (delta < 0.0 || rng.uniform01() < sa_accept_probability(delta, temperature)) {
      current = std::move(neighbor);
      current_length = neighbor_length;
      if (current_length < result.best_length) {
        result.best_tour = current;
        result.best_length = current_length;
      }
    }
    temperature *= config.cooling;
    result.trace.push_back(result.best_length);
    result.raw_trace.push_back(current_length);
  }

  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult sa_solve(const TspInstance& instance, const SaConfig& config) {
  return sa_solve(build_distance_matrix(instance), config);
}

}  // namespace statsp
