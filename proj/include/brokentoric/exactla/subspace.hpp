#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brokentoric/exactla/matrix.hpp"

namespace brokentoric::exactla {

/// A linear subspace of Q^M held by its reduced row-echelon basis.
///
/// The canonical basis makes equality structural: two Subspace values
/// compare equal iff they are the same subspace, whatever generators they
/// were built from.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `generators` inside Q^{generators.cols()}.
  static Subspace span(const RationalMatrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  /// Pivot column of each basis row.
  std::span<const std::size_t> pivots() const { return pivots_; }

  bool contains_vector(std::span<const Rational> v) const;
  /// Coordinates of v in the canonical basis. v must lie in the subspace.
  std::vector<Rational> coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a subspace of Q^{m.cols()}.
Subspace kernel_basis(const RationalMatrix& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// u ⊇ v.
bool contains(const Subspace& u, const Subspace& v);

/// i-th exterior power inside ⋀^i Q^M = Q^{C(M,i)}; coordinates are indexed
/// by the lexicographically ordered i-subsets of {0..M-1} (see lex_subsets).
Subspace exterior_power(const Subspace& u, std::size_t i);

/// Matrix (to.dim() × from.dim()) of the inclusion from ↪ to in the two
/// canonical bases. Throws PreconditionError unless to ⊇ from.
RationalMatrix inclusion_matrix(const Subspace& from, const Subspace& to);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace brokentoric::exactla
