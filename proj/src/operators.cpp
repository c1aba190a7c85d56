#include "statsp/operators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace statsp {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

bool is_identity_swap(const SwapMove& move) { return move.targets == move.images; }

void validate_swap(const SwapMove& move, int n) {
  require(!move.targets.empty(), "swap: empty target list");
  require(move.targets.size() == move.images.size(), "swap: targets/images size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : move.targets) {
    require(p >= 1 && p <= n, "swap: position " + std::to_string(p) + " out of range");
    require(!seen[static_cast<std::size_t>(p)], "swap: duplicate position " + std::to_string(p));
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int p : move.images) {
    require(p >= 1 && p <= n, "swap: image " + std::to_string(p) + " out of range");
    require(seen[static_cast<std::size_t>(p)], "swap: images are not a permutation of targets");
    seen[static_cast<std::size_t>(p)] = false;  // each image consumed once
  }
}

void validate_shift(const ShiftMove& move, int n) {
  require(move.block_len >= 1, "shift: block length must be positive");
  require(move.block_start >= 1 && move.block_start + move.block_len - 1 <= n,
          "shift: block out of range");
  require(move.insert_after >= 1 && move.insert_after <= n,
          "shift: insertion point out of range");
  const int block_end = move.block_start + move.block_len - 1;
  require(move.insert_after < move.block_start || move.insert_after > block_end,
          "shift: insertion point inside the block");
  require(move.insert_after != move.block_start - 1, "shift: identity insertion point");
}

void validate_symmetry(const SymmetryMove& move, int n) {
  require(move.half_len >= 1, "symmetry: half length must be positive");
  require(move.center_len >= 0, "symmetry: negative center length");
  require(move.pivot - move.half_len + 1 >= 1, "symmetry: block extends before position 1");
  require(move.pivot + move.center_len + move.half_len <= n,
          "symmetry: block extends past position n");
}

void validate_move(const Move& move, int n) {
  std::visit(
      [n](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SwapMove>) {
          validate_swap(m, n);
        } else if constexpr (std::is_same_v<T, ShiftMove>) {
          validate_shift(m, n);
        } else {
          validate_symmetry(m, n);
        }
      },
      move);
}

// Old position selected by row `row` after a shift, as a closed-form cyclic
// rotation of the affected span. Rows outside the span are untouched.
int shift_source_position(const ShiftMove& move, int row) {
  const int block_end = move.block_start + move.block_len - 1;
  if (move.insert_after > block_end) {  // block moves right
    if (row < move.block_start || row > move.insert_after) return row;
    if (row <= move.insert_after - move.block_len) return row + move.block_len;
    return move.block_start + (row - (move.insert_after - move.block_len + 1));
  }
  // block moves left
  if (row <= move.insert_after || row > block_end) return row;
  if (row <= move.insert_after + move.block_len) {
    return move.block_start + (row - move.insert_after - 1);
  }
  return row - move.block_len;
}

}  // namespace

void validate_params(const OperatorParams& params, int n) {
  require(params.swap_factor >= 2, "swap factor must be at least 2");
  require(params.shift_factor >= 1, "shift factor must be at least 1");
  require(params.symmetry_factor >= 0, "symmetry factor must be nonnegative");
  require(n >= params.swap_factor,
          "instance too small for swap factor " + std::to_string(params.swap_factor));
  require(n >= 3, "instance must have at least 3 nodes");
  require(n >= 2 + params.symmetry_factor,
          "instance too small for symmetry factor " + std::to_string(params.symmetry_factor));
}

PermutationMatrix PermutationMatrix::identity(int n) {
  PermutationMatrix matrix;
  matrix.n = n;
  matrix.row_to_col.resize(static_cast<std::size_t>(n));
  std::iota(matrix.row_to_col.begin(), matrix.row_to_col.end(), 0);
  return matrix;
}

bool PermutationMatrix::is_valid() const {
  if (static_cast<int>(row_to_col.size()) != n) return false;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int col : row_to_col) {
    if (col < 0 || col >= n || used[static_cast<std::size_t>(col)]) return false;
    used[static_cast<std::size_t>(col)] = true;
  }
  return true;
}

Move sample_swap(int n, int swap_factor, Rng& rng, bool resample_identity) {
  require(swap_factor >= 2, "sample_swap: swap factor must be at least 2");
  require(n >= swap_factor, "sample_swap: need n >= swap factor");
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 1);
  SwapMove move;
  for (;;) {
    rng.shuffle(positions);
    move.targets.assign(positions.begin(), positions.begin() + swap_factor);
    move.images = move.targets;
    rng.shuffle(move.images);
    if (!resample_identity || !is_identity_swap(move)) break;
  }
  return move;
}

Move sample_shift(int n, int shift_factor, Rng& rng) {
  require(shift_factor >= 1, "sample_shift: shift factor must be at least 1");
  require(n >= 3, "sample_shift: need at least 3 nodes");
  ShiftMove move;
  move.block_len = rng.uniform_int(1, std::min(shift_factor, n - 1));
  // Every start admits an insertion point except a full-length block not
  // anchored at position 1.
  const int max_start = move.block_len == n - 1 ? 1 : n - move.block_len + 1;
  move.block_start = rng.uniform_int(1, max_start);
  // Valid insertion points: [1 .. block_start-2] and [block_start+len .. n].
  const int left_count = std::max(0, move.block_start - 2);
  const int right_count = n - (move.block_start + move.block_len) + 1;
  const int pick = rng.uniform_int(0, left_count + right_count - 1);
  move.insert_after =
      pick < left_count ? pick + 1 : move.block_start + move.block_len + (pick - left_count);
  return move;
}

Move sample_symmetry(int n, int symmetry_factor, Rng& rng) {
  require(symmetry_factor >= 0, "sample_symmetry: negative symmetry factor");
  require(n >= 2 + symmetry_factor, "sample_symmetry: need n >= 2 + symmetry factor");
  SymmetryMove move;
  move.center_len = rng.uniform_int(0, symmetry_factor);
  // Positions admitting half_len >= 1 are exactly 1 .. n - center_len - 1.
  move.pivot = rng.uniform_int(1, n - move.center_len - 1);
  move.half_len = rng.uniform_int(1, std::min(move.pivot, n - move.pivot - move.center_len));
  return move;
}

Tour apply_move(const Tour& tour, const Move& move) {
  const int n = tour.size();
  validate_move(move, n);
  if (const auto* swap = std::get_if<SwapMove>(&move)) {
    Tour result = tour;
    for (std::size_t i = 0; i < swap->targets.size(); ++i) {
      result.order[static_cast<std::size_t>(swap->targets[i]) - 1] =
          tour.order[static_cast<std::size_t>(swap->images[i]) - 1];
    }
    return result;
  }
  if (const auto* shift = std::get_if<ShiftMove>(&move)) {
    const int block_end = shift->block_start + shift->block_len - 1;
    Tour result;
    result.order.reserve(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
      if (pos >= shift->block_start && pos <= block_end) continue;
      result.order.push_back(tour.order[static_cast<std::size_t>(pos) - 1]);
      if (pos == shift->insert_after) {
        for (int b = shift->block_start; b <= block_end; ++b) {
          result.order.push_back(tour.order[static_cast<std::size_t>(b) - 1]);
        }
      }
    }
    return result;
  }
  const auto& sym = std::get<SymmetryMove>(move);
  Tour result = tour;
  auto first = result.order.begin() + (sym.pivot - sym.half_len);
  auto last = result.order.begin() + (sym.pivot + sym.center_len + sym.half_len);
  std::reverse(first, last);
  return result;
}

PermutationMatrix move_to_matrix(const Move& move, int n) {
  validate_move(move, n);
  PermutationMatrix matrix = PermutationMatrix::identity(n);
  if (const auto* swap = std::get_if<SwapMove>(&move)) {
    // Rows T of the identity are replaced by rows S.
    for (std::size_t i = 0; i < swap->targets.size(); ++i) {
      matrix.row_to_col[static_cast<std::size_t>(swap->targets[i]) - 1] = swap->images[i] - 1;
    }
    return matrix;
  }
  if (const auto* shift = std::get_if<ShiftMove>(&move)) {
    for (int row = 1; row <= n; ++row) {
      matrix.row_to_col[static_cast<std::size_t>(row) - 1] =
          shift_source_position(*shift, row) - 1;
    }
    return matrix;
  }
  const auto& sym = std::get<SymmetryMove>(move);
  // Row p-k+1+i selects old position p+c+k-i: a mirror within the block.
  const int lo = sym.pivot - sym.half_len + 1;
  const int hi = sym.pivot + sym.center_len + sym.half_len;
  for (int row = lo; row <= hi; ++row) {
    matrix.row_to_col[static_cast<std::size_t>(row) - 1] = (hi - (row - lo)) - 1;
  }
  return matrix;
}

Tour apply_matrix(const PermutationMatrix& matrix, const Tour& tour) {
  require(matrix.n == tour.size(), "apply_matrix: size mismatch");
  require(matrix.is_valid(), "apply_matrix: not a permutation matrix");
  Tour result;
  result.order.resize(tour.order.size());
  for (int row = 0; row < matrix.n; ++row) {
    result.order[static_cast<std::size_t>(row)] =
        tour.order[static_cast<std::size_t>(matrix.row_to_col[static_cast<std::size_t>(row)])];
  }
  return result;
}

PermutationMatrix matrix_product(const PermutationMatrix& a, const PermutationMatrix& b) {
  require(a.n == b.n, "matrix_product: size mismatch");
  require(a.is_valid() && b.is_valid(), "matrix_product: not a permutation matrix");
  PermutationMatrix product;
  product.n = a.n;
  product.row_to_col.resize(static_cast<std::size_t>(a.n));
  for (int row = 0; row < a.n; ++row) {
    product.row_to_col[static_cast<std::size_t>(row)] =
        b.row_to_col[static_cast<std::size_t>(a.row_to_col[static_cast<std::size_t>(row)])];
  }
  return product;
}

std::string move_to_string(const Move& move) {
  std::ostringstream out;
  if (const auto* swap = std::get_if<SwapMove>(&move)) {
    out << "swap [";
    for (std::size_t i = 0; i < swap->targets.size(); ++i) {
      out << (i ? "," : "") << swap->targets[i];
    }
    out << "]->[";
    for (std::size_t i = 0; i < swap->images.size(); ++i) {
      out << (i ? "," : "") << swap->images[i];
    }
    out << "]";
  } else if (const auto* shift = std::get_if<ShiftMove>(&move)) {
    out << "shift [" << shift->block_start << ".." << shift->block_start + shift->block_len - 1
        << "]->after " << shift->insert_after;
  } else {
    const auto& sym = std::get<SymmetryMove>(move);
    out << "sym " << sym.pivot << "," << sym.center_len << "," << sym.half_len;
  }
  return out.str();
}

}  // namespace statsp
