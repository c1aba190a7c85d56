#ifndef STATSP_DISTANCE_MATRIX_HPP
#define STATSP_DISTANCE_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace statsp {

/// Dense symmetric matrix of pairwise node distances with zero diagonal.
/// Indices are 0-based; node id k of an instance maps to index k-1.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }

  double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value) {
    d_[static_cast<std::size_t>(i) * n_ + j] = value;
    d_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

 private:
  int n_;
  std::vector<double> d_;
};

}  // namespace statsp

#endif  // STATSP_DISTANCE_MATRIX_HPP
