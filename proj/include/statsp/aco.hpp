#ifndef STATSP_ACO_HPP
#define STATSP_ACO_HPP

#include <cstdint>
#include <vector>

#include "statsp/rng.hpp"
#include "statsp/run_result.hpp"
#include "statsp/tsplib.hpp"

namespace statsp {

struct AcoConfig {
  double alpha = 1.0;  // pheromone weight
  double beta = 5.0;   // heuristic weight
  double rho = 0.9;    // pheromone persistence: tau <- rho*tau + deposits
  int ants = 20;
  int iters = 200;
  std::uint64_t seed = 0;
};

/// Entries never fall below this floor, so no edge probability is an
/// absorbing zero.
inline constexpr double kPheromoneFloor = 1e-12;

/// Symmetric positive trail matrix.
class PheromoneMatrix {
 public:
  explicit PheromoneMatrix(int n, double initial = 1.0)
      : n_(n), tau_(static_cast<std::size_t>(n) * n, initial) {}

  int size() const { return n_; }

  double at(int i, int j) const { return tau_[static_cast<std::size_t>(i) * n_ + j]; }

  void set(int i, int j, double value) {
    tau_[static_cast<std::size_t>(i) * n_ + j] = value;
    tau_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

 private:
  int n_;
  std::vector<double> tau_;
};

/// Ant System construction: start at a uniformly random node, then repeatedly
/// pick an unvisited node j with probability proportional to
/// tau(i,j)^alpha * (1/d(i,j))^beta. Zero distances use a floored heuristic.
Tour aco_construct_tour(const PheromoneMatrix& pheromone, const DistanceMatrix& dmat,
                        double alpha, double beta, Rng& rng);

/// tau <- rho*tau, plus 1/length on every edge each colony tour uses
/// (both directions), then floored at kPheromoneFloor.
PheromoneMatrix aco_update_pheromone(const PheromoneMatrix& pheromone,
                                     const std::vector<Tour>& colony,
                                     const DistanceMatrix& dmat, double rho);

/// Ant System baseline: per iteration every ant constructs a tour, the
/// best-so-far is updated and the trail is evaporated and reinforced.
RunResult aco_solve(const DistanceMatrix& dmat, const AcoConfig& config);
RunResult aco_solve(const TspInstance& instance, const AcoConfig& config);

}  // namespace statsp

#endif  // STATSP_ACO_HPP
