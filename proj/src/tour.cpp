#include "statsp/tour.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace statsp {

TourCheck validate_tour(const Tour& tour, int n) {
  if (tour.size() != n) {
    return {false, "length mismatch: expected " + std::to_string(n) + " entries, got " +
                       std::to_string(tour.size())};
  }
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : tour.order) {
    if (v < 1 || v > n) {
      return {false, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n)};
    }
    ++count[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] > 1) {
      int missing = 0;
      for (int w = 1; w <= n; ++w) {
        if (count[static_cast<std::size_t>(w)] == 0) {
          missing = w;
          break;
        }
      }
      return {false, "duplicate " + std::to_string(v) + " / missing " + std::to_string(missing)};
    }
  }
  return {};
}

Tour random_tour(int n, Rng& rng) {
  if (n < 3) {
    throw std::invalid_argument("random_tour: need at least 3 nodes, got " + std::to_string(n));
  }
  Tour tour;
  tour.order.resize(static_cast<std::size_t>(n));
  std::iota(tour.order.begin(), tour.order.end(), 1);
  rng.shuffle(tour.order);
  return tour;
}

double tour_length(const Tour& tour, const DistanceMatrix& dmat) {
  const int n = tour.size();
  if (n != dmat.size()) {
    throw std::invalid_argument("tour_length: tour has " + std::to_string(n) +
                                " nodes but matrix is " + std::to_string(dmat.size()) + "x" +
                                std::to_string(dmat.size()));
  }
  double total = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    total += dmat.at(tour.order[static_cast<std::size_t>(i)] - 1,
                     tour.order[static_cast<std::size_t>(i) + 1] - 1);
  }
  total += dmat.at(tour.order[static_cast<std::size_t>(n) - 1] - 1, tour.order[0] - 1);
  return total;
}

std::string format_tour(const Tour& tour) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tour.order.size(); ++i) {
    if (i > 0) out << ' ';
    out << tour.order[i];
  }
  return out.str();
}

Tour parse_tour(const std::string& text) {
  Tour tour;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("parse_tour: bad token '" + token + "'");
    }
    tour.order.push_back(value);
  }
  return tour;
}

}  // namespace statsp
