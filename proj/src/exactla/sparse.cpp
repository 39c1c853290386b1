#include "brokentoric/exactla/sparse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "brokentoric/error.hpp"

namespace brokentoric::exactla {

namespace {

// a - f * b for rows sorted by column.
SparseMatrix::Row axpy(const SparseMatrix::Row& a, const Rational& f, const SparseMatrix::Row& b) {
  SparseMatrix::Row out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -f * ib->second);
      ++ib;
    } else {
      Rational v = ia->second - f * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw PreconditionError("sparse entry out of range");
  if (value == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, Entry{c, value});
  }
}

void SparseMatrix::add_block(std::size_t row0, std::size_t col0, const RationalMatrix& block, int scale) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      if (block(r, c) != 0) add(row0 + r, col0 + c, scale * block(r, c));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

RationalMatrix SparseMatrix::to_dense() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.data_[r].emplace_back(c, m(r, c));
  return s;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("sparse product shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : rhs.data_[k]) acc[c] += a * b;
    for (auto& [c, v] : acc)
      if (v != 0) out.data_[r].emplace_back(c, std::move(v));
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

std::size_t rank(const SparseMatrix& m) {
  // Row echelon by insertion: each incoming row is reduced against stored
  // pivot rows (keyed by leading column) until it is zero or has a new lead.
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });

  std::unordered_map<std::size_t, SparseMatrix::Row> pivots;
  for (std::size_t idx : order) {
    SparseMatrix::Row row = m.row(idx);
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Rational f = row.front().second;
      row = axpy(row, f, it->second);
    }
  }
  return pivots.size();
}

}  // namespace brokentoric::exactla
