#include "statsp/aco.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace statsp {
namespace {

void validate_config(const AcoConfig& config) {
  if (config.ants < 1) throw std::invalid_argument("aco: ants must be at least 1");
  if (config.iters < 1) throw std::invalid_argument("aco: iters must be at least 1");
  if (config.rho <= 0.0 || config.rho >= 1.0) {
    throw std::invalid_argument("aco: rho must be in (0, 1)");
  }
  if (config.alpha < 0.0 || config.beta < 0.0) {
    throw std::invalid_argument("aco: alpha and beta must be nonnegative");
  }
}

}  // namespace

Tour aco_construct_tour(const PheromoneMatrix& pheromone, const DistanceMatrix& dmat,
                        double alpha, double beta, Rng& rng) {
  const int n = dmat.size();
  if (pheromone.size() != n) throw std::invalid_argument("aco_construct_tour: size mismatch");

  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> unvisited;
  std::vector<double> weight;
  unvisited.reserve(static_cast<std::size_t>(n));
  weight.reserve(static_cast<std::size_t>(n));

  Tour tour;
  tour.order.reserve(static_cast<std::size_t>(n));
  int current = rng.uniform_int(0, n - 1);
  tour.order.push_back(current + 1);
  visited[static_cast<std::size_t>(current)] = true;

  for (int step = 1; step < n; ++step) {
    unvisited.clear();
    weight.clear();
    // Log-space weights, shifted by the maximum before exponentiating, keep
    // tau^alpha * eta^beta finite for any alpha/beta.
    double max_log = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      const double tau = std::max(pheromone.at(current, j), kPheromoneFloor);
      const double dist = std::max(dmat.at(current, j), kPheromoneFloor);
      const double log_w = alpha * std::log(tau) - beta * std::log(dist);
      unvisited.push_back(j);
      weight.push_back(log_w);
      max_log = std::max(max_log, log_w);
    }
    double total = 0.0;
    for (double& w : weight) {
      w = std::exp(w - max_log);
      total += w;
    }
    const double draw = rng.uniform01() * total;
    double cumulative = 0.0;
    int chosen = unvisited.back();
    for (std::size_t idx = 0; idx < unvisited.size(); ++idx) {
      cumulative += weight[idx];
      if (draw < cumulative) {
        chosen = unvisited[idx];
        break;
      }
    }
    tour.order.push_back(chosen + 1);
    visited[static_cast<std::size_t>(chosen)] = true;
    current = chosen;
  }
  return tour;
}

PheromoneMatrix aco_update_pheromone(const PheromoneMatrix& pheromone,
                                     const std::vector<Tour>& colony,
                                     const DistanceMatrix& dmat, double rho) {
  const int n = pheromone.size();
  PheromoneMatrix updated(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      updated.set(i, j, rho * pheromone.at(i, j));
    }
  }
  for (const Tour& tour : colony) {
    if (tour.size() != n) throw std::invalid_argument("aco_update_pheromone: tour size mismatch");
    const double deposit = 1.0 / tour_length(tour, dmat);  // Q = 1
    for (int pos = 0; pos < n; ++pos) {
      const int a = tour.order[static_cast<std::size_t>(pos)] - 1;
      const int b = tour.order[static_cast<std::size_t>((pos + 1) % n)] - 1;
      updated.set(a, b, updated.at(a, b) + deposit);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (updated.at(i, j) < kPheromoneFloor) updated.set(i, j, kPheromoneFloor);
    }
  }
  return updated;
}

RunResult aco_solve(const DistanceMatrix& dmat, const AcoConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(config);
  const int n = dmat.size();
  if (n < 3) throw std::invalid_argument("aco_solve: need at least 3 nodes");

  Rng rng(config.seed);
  PheromoneMatrix pheromone(n, 1.0);
  RunResult result;
  result.trace.reserve(static_cast<std::size_t>(config.iters));
  bool have_best = false;

  std::vector<Tour> colony;
  colony.reserve(static_cast<std::size_t>(config.ants));
  for (int iter = 0; iter < config.iters; ++iter) {
    colony.clear();
    for (int ant = 0; ant < config.ants; ++ant) {
      Tour tour = aco_construct_tour(pheromone, dmat, config.alpha, config.beta, rng);
      const double length = tour_length(tour, dmat);
      ++result.eval_count;
      if (!have_best || length < result.best_length) {
        result.best_tour = tour;
        result.best_length = length;
        have_best = true;
      }
      colony.push_back(std::move(tour));
    }
    pheromone = aco_update_pheromone(pheromone, colony, dmat, config.rho);
    result.trace.push_back(result.best_length);
  }

  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult aco_solve(const TspInstance& instance, const AcoConfig& config) {
  return aco_solve(build_distance_matrix(instance), config);
}

}  // namespace statsp
