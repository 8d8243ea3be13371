#pragma once

#include <cstddef>
#include <vector>

namespace amoeba {

/// Fraction-free (Bareiss) row reduction over an integral domain.
/// Ring needs operator*, operator-, is_zero() and div_exact(); all
/// intermediate divisions are exact by the Sylvester determinant identity.
/// Destroys m; returns its rank.
template <typename Ring>
int bareiss_rank(std::vector<std::vector<Ring>>& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();

  Ring prev_pivot;  // previous leading minor; value 1 before first step
  bool have_prev = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < rows && m[pivot_row][c].is_zero()) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) std::swap(m[pivot_row], m[r]);

    const Ring pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Ring t = m[i][j] * pivot - m[i][c] * m[r][j];
        m[i][j] = have_prev ? t.div_exact(prev_pivot) : std::move(t);
      }
      m[i][c] = Ring{};
    }
    prev_pivot = pivot;
    have_prev = true;
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace amoeba
