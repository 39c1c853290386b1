#include "brokentoric/exactla/subspace.hpp"

#include "brokentoric/error.hpp"

namespace brokentoric::exactla {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw PreconditionError(std::string(op) + ": ambient dimensions differ (" + std::to_string(u.ambient_dim()) +
                            " vs " + std::to_string(v.ambient_dim()) + ")");
  }
}

void next_subset(std::vector<std::size_t>& s, std::size_t n, bool& done) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i > 0 && s[i - 1] == n - k + i - 1) --i;
  if (i == 0) {
    done = true;
    return;
  }
  ++s[i - 1];
  for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = RationalMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(RationalMatrix::identity(ambient_dim)); }

Subspace Subspace::span(const RationalMatrix& generators) {
  Subspace s;
  s.ambient_dim_ = generators.cols();
  s.basis_ = rref(generators, &s.pivots_);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators) {
  return span(RationalMatrix::from_rows(generators, ambient_dim));
}

bool Subspace::contains_vector(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw PreconditionError("vector length differs from ambient dimension");
  std::vector<Rational> residual(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational c = residual[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) residual[k] -= c * basis_(r, k);
  }
  for (const auto& x : residual)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains_vector(v)) throw PreconditionError("vector does not lie in the subspace");
  std::vector<Rational> coords(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace kernel_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  const RationalMatrix reduced = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> generators;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    generators.push_back(std::move(v));
  }
  return Subspace::span(cols, generators);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "sum");
  return Subspace::span(u.basis().stacked(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "intersect");
  // u ∩ v = ann(ann(u) + ann(v))
  const Subspace ann_u = kernel_basis(u.basis());
  const Subspace ann_v = kernel_basis(v.basis());
  return kernel_basis(ann_u.basis().stacked(ann_v.basis()));
}

bool contains(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "contains");
  if (v.dim() > u.dim()) return false;
  for (std::size_t r = 0; r < v.dim(); ++r)
    if (!u.contains_vector(v.basis().row(r))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  bool done = false;
  while (!done) {
    out.push_back(s);
    if (k == 0) break;
    next_subset(s, n, done);
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Subspace exterior_power(const Subspace& u, std::size_t i) {
  const std::size_t m = u.ambient_dim();
  if (i == 0) return Subspace::full(1);
  const std::size_t target = binomial(m, i);
  if (i > u.dim()) return Subspace::zero(target);

  const auto coordinate_sets = lex_subsets(m, i);
  std::vector<std::vector<Rational>> wedges;
  for (const auto& rows : lex_subsets(u.dim(), i)) {
    std::vector<Rational> w(target);
    for (std::size_t s = 0; s < coordinate_sets.size(); ++s) {
      RationalMatrix minor(i, i);
      for (std::size_t a = 0; a < i; ++a)
        for (std::size_t b = 0; b < i; ++b) minor(a, b) = u.basis()(rows[a], coordinate_sets[s][b]);
      w[s] = determinant(std::move(minor));
    }
    wedges.push_back(std::move(w));
  }
  return Subspace::span(target, wedges);
}

RationalMatrix inclusion_matrix(const Subspace& from, const Subspace& to) {
  require_same_ambient(from, to, "inclusion_matrix");
  RationalMatrix out(to.dim(), from.dim());
  for (std::size_t c = 0; c < from.dim(); ++c) {
    const auto coords = to.coordinates(from.basis().row(c));
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, c) = coords[r];
  }
  return out;
}

}  // namespace brokentoric::exactla
