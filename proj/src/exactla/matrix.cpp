#include "brokentoric/exactla/matrix.hpp"

#include <utility>

#include "brokentoric/error.hpp"

namespace brokentoric::exactla {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw PreconditionError("row block out of range");
  RationalMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& below) const {
  if (cols_ != below.cols_) throw PreconditionError("stacking matrices with different column counts");
  RationalMatrix out(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= f * m(lead, k);
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  if (pivots) *pivots = pivot_cols;
  return m.row_block(0, lead);
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return rref(m).rows();
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

}  // namespace brokentoric::exactla
