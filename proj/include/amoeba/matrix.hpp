#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amoeba/gaussian.hpp"
#include "amoeba/subset.hpp"

namespace amoeba {

/// d x n matrix over Q(i) presenting a linear subspace V as its row space.
/// Column labels {0,...,n-1} are the matroid ground set.
class GRMatrix {
 public:
  GRMatrix(int rows, int cols);
  GRMatrix(std::vector<std::vector<GaussianRational>> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const GaussianRational& at(int r, int c) const { return entries_[r][c]; }
  GaussianRational& at(int r, int c) { return entries_[r][c]; }

  bool column_is_zero(int c) const;

  /// First zero column index, or -1 if none.
  int find_zero_column() const;

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<GaussianRational>> entries_;
};

/// Rank of the column submatrix A[S], by fraction-free elimination over
/// Z[i] after clearing row denominators (row scaling preserves all column
/// ranks). Exact; S may be empty.
int linear_rank(const GRMatrix& a, const SubsetMask& s);

/// Row-scaled Z[i] copy of a matrix; repeated rank queries reuse it.
std::vector<std::vector<GaussInt>> integerize_rows(const GRMatrix& a);
int rank_of_columns(const std::vector<std::vector<GaussInt>>& zi, const SubsetMask& s);

/// Text format: one row per line, whitespace-separated entries in the
/// grammar of parse_gaussian; blank lines and '#' comments ignored.
GRMatrix parse_matrix_text(std::string_view text);

/// Builds a matrix from entry strings, e.g. {{"1","0","i"},{"0","1/2","3-i"}}.
GRMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows);

std::string matrix_to_text(const GRMatrix& a);

}  // namespace amoeba
