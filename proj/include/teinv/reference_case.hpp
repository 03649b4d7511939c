#pragma once

/**
 * @brief Hand-worked reference tensors of shape [2,3]x[2,3] with known core
 *        inverses, used by the validation tests and the acceptance run.
 *
 * The tensors are recorded block by block: block (k, l) holds the 2 x 3 slice
 * over the left indices (i, j). reference_b matricizes to diag(1,0,1,1,1,1),
 * a Hermitian idempotent, so its core inverse equals itself. The as-given
 * tables for the core inverses of B and of A*B each contain entries that fail
 * the defining-equation oracle; they are kept verbatim so the tests can
 * report a per-entry match/mismatch account instead of silently correcting
 * them.
 */

#include <array>

#include "teinv/tensor.hpp"

namespace teinv::reference {

using Block = std::array<std::array<double, 3>, 2>;
using BlockTable = std::array<Block, 6>;  ///< blocks (k,l) in order (1,1),(1,2),(1,3),(2,1),(2,2),(2,3)

inline DenseTensor from_blocks(const BlockTable& blocks) {
  DenseTensor t(TensorShape{{2, 3}, {2, 3}});
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const std::size_t k = bi / 3;
    const std::size_t l = bi % 3;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) t.set({i, j}, {k, l}, blocks[bi][i][j]);
  }
  return t;
}

/** @brief Left factor A of the reference pair. */
inline DenseTensor reference_a() {
  return from_blocks(BlockTable{{
      {{{1, 0, 1}, {0, 0, -1}}},
      {{{0, 0, 0}, {0, 0, 0}}},
      {{{1, 0, 0}, {1, 0, 0}}},
      {{{0, 0, 1}, {0, 1, 0}}},
      {{{0, 0, 0}, {1, 1, 0}}},
      {{{-1, 0, 0}, {0, 0, 0}}},
  }});
}

/** @brief Right factor B; matricizes to diag(1,0,1,1,1,1). */
inline DenseTensor reference_b() {
  return from_blocks(BlockTable{{
      {{{1, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 1}, {0, 0, 0}}},
      {{{0, 0, 0}, {1, 0, 0}}},
      {{{0, 0, 0}, {0, 1, 0}}},
      {{{0, 0, 0}, {0, 0, 1}}},
  }});
}

/** @brief As-given table for the core inverse of A. */
inline DenseTensor reference_core_a_table() {
  return from_blocks(BlockTable{{
      {{{0, 0, 0}, {0, 0, -1}}},
      {{{0, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 1}, {1, -1, 1}}},
      {{{0, 0, 1}, {0, 0, 1}}},
      {{{0, 0, -1}, {0, 1, -1}}},
      {{{-1, 0, 1}, {1, -1, 0}}},
  }});
}

/**
 * @brief As-given table for the core inverse of B. Its (i,j,k,l) = (2,1,2,2)
 *        entry (-8) is inconsistent with the defining equations; the
 *        oracle-validated core inverse of B is B itself.
 */
inline DenseTensor reference_core_b_table() {
  return from_blocks(BlockTable{{
      {{{1, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 1}, {0, 0, 0}}},
      {{{0, 0, 0}, {1, 0, 0}}},
      {{{0, 0, 0}, {-8, 1, 0}}},
      {{{0, 0, 0}, {0, 0, 1}}},
  }});
}

/**
 * @brief As-given table for the core inverse of A*B. Three entries (the 9, -8,
 *        and 9 in the second row of blocks (1,3), (2,2), (2,3)) are
 *        inconsistent with the defining equations; they equal the product of
 *        the as-given B and A tables including the bad -8 entry above.
 */
inline DenseTensor reference_core_ab_table() {
  return from_blocks(BlockTable{{
      {{{0, 0, 0}, {0, 0, -1}}},
      {{{0, 0, 0}, {0, 0, 0}}},
      {{{0, 0, 1}, {9, -1, 1}}},
      {{{0, 0, 1}, {0, 0, 1}}},
      {{{0, 0, -1}, {-8, 1, -1}}},
      {{{-1, 0, 1}, {9, -1, 0}}},
  }});
}

}  // namespace teinv::reference
