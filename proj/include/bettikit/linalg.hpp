#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bettikit/field.hpp"

namespace bettikit {

/// Dense row-major matrix over GF(p).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// From nested rows; entries are taken as given and must already be reduced.
  static ModMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v; }

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Rank by row echelon elimination mod p. Deterministic.
std::size_t matrix_rank(ModMatrix m, const PrimeField& k);

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& k);

}  // namespace bettikit
