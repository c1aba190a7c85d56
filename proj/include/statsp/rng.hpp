#ifndef STATSP_RNG_HPP
#define STATSP_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace statsp {

/// Finalizer of the splitmix64 generator; maps any 64-bit value to a
/// well-mixed one.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for trial number `trial` derived from a master seed. Equals the
/// (trial+1)-th output of a splitmix64 stream seeded with `master`, so
/// trials can be generated in any order.
inline std::uint64_t trial_seed(std::uint64_t master, int trial) {
  return mix64(master + static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL);
}

/// Seeded random stream. Wraps mt19937_64 with bounded sampling that does
/// not depend on the standard library's distribution implementations, so
/// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], both inclusive. Unbiased (rejection).
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % range;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % range);
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
      std::swap(values[i], values[static_cast<std::size_t>(uniform_int(0, i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace statsp

#endif  // STATSP_RNG_HPP
