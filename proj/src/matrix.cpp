#include "orbitkit/matrix.hpp"

namespace orbitkit {

std::optional<std::vector<GaussianRational>> solve_linear(const QMatrix& a, const std::vector<GaussianRational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  QMatrix aug(rows, cols + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < rows; ++i) aug(i, cols) = b[i];

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && aug(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(row, j), aug(p, j));
    }
    GaussianRational inv = aug(row, col).inverse();
    for (std::size_t j = col; j <= cols; ++j) aug(row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug(r, col).is_zero()) continue;
      GaussianRational f = aug(r, col);
      for (std::size_t j = col; j <= cols; ++j) {
        if (!aug(row, j).is_zero()) aug(r, j) -= f * aug(row, j);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!aug(r, cols).is_zero()) return std::nullopt;
  }
  std::vector<GaussianRational> x(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = aug(k, cols);
  return x;
}

}  // namespace orbitkit
