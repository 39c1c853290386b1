#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brokentoric/exactla/rational.hpp"

namespace brokentoric::exactla {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Every row must have exactly `cols` entries.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool is_zero() const;

  /// Rows [first, first + count) as a new matrix.
  RationalMatrix row_block(std::size_t first, std::size_t count) const;
  /// Stacks `below` under this matrix; column counts must agree.
  RationalMatrix stacked(const RationalMatrix& below) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row-echelon form with unit pivots and zero rows dropped.
/// `pivots`, when given, receives the pivot column of each returned row.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Determinant of a square matrix (1 for the 0×0 matrix).
Rational determinant(RationalMatrix m);

}  // namespace brokentoric::exactla
