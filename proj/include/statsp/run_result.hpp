#ifndef STATSP_RUN_RESULT_HPP
#define STATSP_RUN_RESULT_HPP

#include <cstdint>
#include <vector>

#include "statsp/tour.hpp"

namespace statsp {

/// Outcome of one solver run.
struct RunResult {
  Tour best_tour;
  double best_length = 0.0;
  std::vector<double> trace;      // best-so-far length per iteration
  std::vector<double> raw_trace;  // current length per iteration; only filled
                                  // by solvers that can move uphill (SA)
  std::uint64_t eval_count = 0;   // fitness evaluations performed
  double wall_time = 0.0;         // seconds
};

}  // namespace statsp

#endif  // STATSP_RUN_RESULT_HPP
