#include "bettikit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "bettikit/kernels.hpp"

namespace bettikit {

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ModMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t matrix_rank(ModMatrix m, const PrimeField& k) {
  const std::uint32_t p = k.characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(m.row(pivot).begin() + col, m.row(pivot).end(), m.row(rank).begin() + col);

    auto pivot_row = m.row(rank).subspan(col);
    kernels::scale(pivot_row, k.inv(pivot_row[0]), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t e = m.at(r, col);
      if (e != 0) kernels::axpy(m.row(r).subspan(col), pivot_row, p - e, p);
    }
    ++rank;
  }
  return rank;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& k) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  ModMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const std::uint32_t e = a.at(i, t);
      if (e != 0) kernels::axpy(c.row(i), b.row(t), e, k.characteristic());
    }
  return c;
}

}  // namespace bettikit
