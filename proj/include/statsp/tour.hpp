#ifndef STATSP_TOUR_HPP
#define STATSP_TOUR_HPP

#include <string>
#include <vector>

#include "statsp/distance_matrix.hpp"
#include "statsp/rng.hpp"

namespace statsp {

/// A cyclic route: a permutation of the node ids 1..n in visiting order.
struct Tour {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }

  bool operator==(const Tour& other) const { return order == other.order; }
};

struct TourCheck {
  bool ok = true;
  std::string message;
};

/// Accepts iff `tour.order` is a permutation of 1..n; otherwise the message
/// names the duplicated/missing index or the length mismatch.
TourCheck validate_tour(const Tour& tour, int n);

/// Uniformly random permutation of 1..n. Requires n >= 3.
Tour random_tour(int n, Rng& rng);

/// Total length of the closed cycle, including the edge back to the start.
/// Throws on tour/matrix dimension mismatch.
double tour_length(const Tour& tour, const DistanceMatrix& dmat);

/// Whitespace-separated 1-based index list, e.g. "1 5 3 2 4".
std::string format_tour(const Tour& tour);

/// Parses the format written by format_tour. Throws on non-numeric tokens.
Tour parse_tour(const std::string& text);

}  // namespace statsp

#endif  // STATSP_TOUR_HPP
