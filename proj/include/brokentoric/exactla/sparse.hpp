#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "brokentoric/exactla/matrix.hpp"

namespace brokentoric::exactla {

/// Row-compressed exact-rational matrix for cochain differentials.
/// Rows keep their entries sorted by column with no explicit zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);
  /// Adds `scale * block` with its top-left corner at (row0, col0).
  void add_block(std::size_t row0, std::size_t col0, const RationalMatrix& block, int scale);

  Rational at(std::size_t r, std::size_t c) const;
  RationalMatrix to_dense() const;
  static SparseMatrix from_dense(const RationalMatrix& m);

  /// this · rhs.
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

std::size_t rank(const SparseMatrix& m);

}  // namespace brokentoric::exactla
