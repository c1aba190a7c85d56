#ifndef STATSP_OPERATORS_HPP
#define STATSP_OPERATORS_HPP

#include <string>
#include <variant>
#include <vector>

#include "statsp/rng.hpp"
#include "statsp/tour.hpp"

namespace statsp {

/// Factors bounding the three transformation operators.
struct OperatorParams {
  int swap_factor = 2;      // max positions whose contents are permuted
  int shift_factor = 1;     // max length of the block removed and reinserted
  int symmetry_factor = 0;  // max length of the fixed center of a reversal
  bool resample_identity_swaps = false;  // redraw swaps whose images equal their targets
};

/// Throws std::invalid_argument if the factors are out of range or the
/// instance is too small for them.
void validate_params(const OperatorParams& params, int n);

// Moves carry 1-based positions, matching the serialized tour convention.

/// New content at position targets[i] comes from position images[i];
/// images is a permutation of targets.
struct SwapMove {
  std::vector<int> targets;
  std::vector<int> images;
};

/// Remove the block [block_start .. block_start+block_len-1] and reinsert it
/// immediately after the element originally at insert_after. insert_after
/// lies outside the block and is not the position just before it.
struct ShiftMove {
  int block_start = 0;
  int block_len = 0;
  int insert_after = 0;
};

/// Reverse the block [pivot-half_len+1 .. pivot+center_len+half_len]: the
/// half_len positions ending at pivot mirror the half_len positions starting
/// at pivot+center_len+1 around the center_len center positions.
struct SymmetryMove {
  int pivot = 0;
  int center_len = 0;
  int half_len = 0;
};

using Move = std::variant<SwapMove, ShiftMove, SymmetryMove>;

/// Permutation matrix in sparse form: row_to_col[i] is the 0-based column
/// holding the single 1 of row i. Applying it to a tour x gives
/// y[i] = x[row_to_col[i]].
struct PermutationMatrix {
  int n = 0;
  std::vector<int> row_to_col;

  static PermutationMatrix identity(int n);

  /// True iff row_to_col is a bijection on 0..n-1.
  bool is_valid() const;
};

/// Swap transformation: swap_factor distinct positions drawn uniformly, then
/// permuted uniformly among themselves. May draw the identity unless
/// resample_identity is set. Requires n >= swap_factor >= 2.
Move sample_swap(int n, int swap_factor, Rng& rng, bool resample_identity = false);

/// Shift transformation: block length uniform in 1..min(shift_factor, n-1),
/// then block start and insertion point uniform among the choices that
/// change the tour. Requires n >= 3 and shift_factor >= 1.
Move sample_shift(int n, int shift_factor, Rng& rng);

/// Symmetry transformation: center length uniform in 0..symmetry_factor,
/// pivot uniform among positions admitting a half length >= 1, half length
/// uniform over its feasible range. Requires n >= 2 + symmetry_factor.
Move sample_symmetry(int n, int symmetry_factor, Rng& rng);

/// Applies a move in index form. Throws std::invalid_argument if the move
/// violates its invariants for a tour of this size.
Tour apply_move(const Tour& tour, const Move& move);

/// The general elementary matrix realizing a move, built directly from the
/// move's position mapping (independent of apply_move).
PermutationMatrix move_to_matrix(const Move& move, int n);

/// y[i] = x[row_to_col[i]]. Throws on size mismatch or an invalid matrix.
Tour apply_matrix(const PermutationMatrix& matrix, const Tour& tour);

/// Matrix product a*b: applying the result equals applying b, then a.
PermutationMatrix matrix_product(const PermutationMatrix& a, const PermutationMatrix& b);

/// Diagnostic form: "swap T->S", "shift [a..b]->after p", "sym p,c,k".
std::string move_to_string(const Move& move);

}  // namespace statsp

#endif  // STATSP_OPERATORS_HPP
