#ifndef STATSP_TESTS_HELPERS_HPP
#define STATSP_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "statsp/operators.hpp"
#include "statsp/rng.hpp"
#include "statsp/tour.hpp"
#include "statsp/tsplib.hpp"

namespace statsp::testing {

inline std::string data_path(const std::string& file) {
  return std::string(STATSP_DATA_DIR) + "/" + file;
}

/// Synthetic instance over explicit planar points, unrounded Euclidean.
inline TspInstance make_instance(const std::vector<std::pair<double, double>>& points,
                                 const std::string& name = "synthetic") {
  TspInstance instance;
  instance.name = name;
  instance.n = static_cast<int>(points.size());
  for (int i = 0; i < instance.n; ++i) {
    instance.coords.push_back(
        {i + 1, points[static_cast<std::size_t>(i)].first, points[static_cast<std::size_t>(i)].second});
  }
  instance.declared_metric = Metric::Euc2d;
  instance.active_metric = Metric::RawEuc;
  return instance;
}

inline TspInstance random_instance(int n, Rng& rng, const std::string& name = "random") {
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    points.emplace_back(rng.uniform01() * 100.0, rng.uniform01() * 100.0);
  }
  return make_instance(points, name);
}

/// Exhaustive search: evaluates every cyclic order with node 1 fixed first.
inline std::pair<Tour, double> brute_force_optimum(const DistanceMatrix& dmat) {
  const int n = dmat.size();
  std::vector<int> rest(static_cast<std::size_t>(n) - 1);
  std::iota(rest.begin(), rest.end(), 2);
  Tour tour;
  tour.order.resize(static_cast<std::size_t>(n));
  tour.order[0] = 1;
  Tour best;
  double best_length = 0.0;
  bool have_best = false;
  do {
    std::copy(rest.begin(), rest.end(), tour.order.begin() + 1);
    const double length = tour_length(tour, dmat);
    if (!have_best || length < best_length) {
      best = tour;
      best_length = length;
      have_best = true;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {best, best_length};
}

/// Every distinct move of the three families for the given factors,
/// identities excluded. Used to walk the move graph exhaustively.
inline std::vector<Move> enumerate_moves(int n, const OperatorParams& params) {
  std::vector<Move> moves;
  // Swaps: every set of swap_factor positions under every non-identity
  // rearrangement. Enumerated for factor 2 (transpositions), which the
  // sampled family always contains.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      moves.push_back(SwapMove{{a, b}, {b, a}});
    }
  }
  for (int len = 1; len <= std::min(params.shift_factor, n - 1); ++len) {
    for (int start = 1; start + len - 1 <= n; ++start) {
      for (int after = 1; after <= n; ++after) {
        if (after >= start - 1 && after <= start + len - 1) continue;
        moves.push_back(ShiftMove{start, len, after});
      }
    }
  }
  for (int center = 0; center <= params.symmetry_factor; ++center) {
    for (int pivot = 1; pivot + center + 1 <= n; ++pivot) {
      for (int half = 1; half <= std::min(pivot, n - pivot - center); ++half) {
        moves.push_back(SymmetryMove{pivot, center, half});
      }
    }
  }
  return moves;
}

/// One uniformly chosen sampled move of any family valid for (n, params).
inline Move sample_any_move(int n, const OperatorParams& params, Rng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0: return sample_swap(n, params.swap_factor, rng, params.resample_identity_swaps);
    case 1: return sample_shift(n, params.shift_factor, rng);
    default: return sample_symmetry(n, params.symmetry_factor, rng);
  }
}

// Best published tours for the bundled instances under unrounded Euclidean
// distance, with their reference lengths.
inline const std::vector<int> kUlysses16BestTour = {7, 6, 14, 13, 12, 16, 1, 3,
                                                    2, 4, 8,  15, 5,  11, 9, 10};
inline constexpr double kUlysses16BestLength = 73.9876;

inline const std::vector<int> kAtt48BestTour = {
    9,  40, 15, 12, 11, 23, 3,  22, 16, 41, 34, 48, 5,  29, 2,  42,
    26, 4,  35, 45, 10, 24, 32, 39, 25, 14, 13, 21, 47, 20, 33, 46,
    36, 30, 43, 17, 27, 19, 37, 6,  28, 7,  18, 44, 31, 38, 8,  1};
inline constexpr double kAtt48BestLength = 3.3724e4;

inline const std::vector<int> kBerlin52BestTour = {
    3,  17, 21, 42, 7,  2,  30, 23, 20, 50, 29, 16, 46, 44, 34, 35, 36, 39,
    40, 37, 38, 48, 24, 5,  15, 6,  4,  25, 12, 28, 27, 26, 47, 13, 14, 52,
    11, 51, 33, 43, 10, 9,  8,  41, 19, 45, 32, 49, 1,  22, 31, 18};
inline constexpr double kBerlin52BestLength = 7.5444e3;

}  // namespace statsp::testing

#endif  // STATSP_TESTS_HELPERS_HPP
