#include "amoeba/matrix.hpp"

#include <sstream>

#include "amoeba/errors.hpp"
#include "amoeba/exact_linalg.hpp"

namespace amoeba {

GRMatrix::GRMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1 || cols > SubsetMask::kMaxGround)
    throw Error(Errc::InvalidParams, "matrix must be d x n with 1 <= n <= 64");
  entries_.assign(rows_, std::vector<GaussianRational>(cols_));
}

GRMatrix::GRMatrix(std::vector<std::vector<GaussianRational>> entries)
    : rows_(static_cast<int>(entries.size())), cols_(0), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::ParseError, "matrix has no rows");
  cols_ = static_cast<int>(entries_[0].size());
  if (cols_ < 1 || cols_ > SubsetMask::kMaxGround)
    throw Error(Errc::ParseError, "matrix must have between 1 and 64 columns");
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != cols_)
      throw Error(Errc::ParseError, "ragged matrix: rows have different lengths");
}

bool GRMatrix::column_is_zero(int c) const {
  for (int r = 0; r < rows_; ++r)
    if (!entries_[r][c].is_zero()) return false;
  return true;
}

int GRMatrix::find_zero_column() const {
  for (int c = 0; c < cols_; ++c)
    if (column_is_zero(c)) return c;
  return -1;
}

// Scale each row to Z[i] by the lcm of all part denominators in the row.
std::vector<std::vector<GaussInt>> integerize_rows(const GRMatrix& a) {
  std::vector<std::vector<GaussInt>> out(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    BigInt scale = 1;
    for (int c = 0; c < a.cols(); ++c) {
      const GaussianRational& z = a.at(r, c);
      scale = lcm(scale, static_cast<BigInt>(denominator(z.re)));
      scale = lcm(scale, static_cast<BigInt>(denominator(z.im)));
    }
    out[r].reserve(static_cast<std::size_t>(a.cols()));
    for (int c = 0; c < a.cols(); ++c) {
      const GaussianRational& z = a.at(r, c);
      out[r].emplace_back(
          static_cast<BigInt>(numerator(z.re) * (scale / denominator(z.re))),
          static_cast<BigInt>(numerator(z.im) * (scale / denominator(z.im))));
    }
  }
  return out;
}

int rank_of_columns(const std::vector<std::vector<GaussInt>>& zi, const SubsetMask& s) {
  if (s.is_empty()) return 0;
  std::vector<std::vector<GaussInt>> sub(zi.size());
  const auto cols = s.elements();
  for (std::size_t r = 0; r < zi.size(); ++r) {
    sub[r].reserve(cols.size());
    for (int c : cols) sub[r].push_back(zi[r][static_cast<std::size_t>(c)]);
  }
  return bareiss_rank(sub);
}

int linear_rank(const GRMatrix& a, const SubsetMask& s) {
  if (s.ground_size != a.cols())
    throw Error(Errc::InvalidParams, "subset ground size does not match column count");
  if (s.is_empty()) return 0;
  return rank_of_columns(integerize_rows(a), s);
}

GRMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<GaussianRational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<GaussianRational> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_gaussian(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return GRMatrix(std::move(rows));
}

GRMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<GaussianRational>> entries;
  entries.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<GaussianRational> r;
    r.reserve(row.size());
    for (const auto& tok : row) r.push_back(parse_gaussian(tok));
    entries.push_back(std::move(r));
  }
  return GRMatrix(std::move(entries));
}

std::string matrix_to_text(const GRMatrix& a) {
  std::string out;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (c) out += ' ';
      out += a.at(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace amoeba
