#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brokentoric/exactla/subspace.hpp"
#include "brokentoric/polytope/complex.hpp"

namespace brokentoric::sheaves {

using exactla::Subspace;
using polytope::PolytopeComplex;

/// A cell-compatible sheaf realized inside a constant sheaf Q^M: one
/// subspace per cell (indexed by cell id), with generization maps being the
/// inclusions stalk(α) ⊆ stalk(β) for α a face of β.
///
/// The sheaf does not own its complex; operations take the complex
/// alongside and check that the cell counts agree.
class CellSheaf {
 public:
  CellSheaf() = default;
  /// Every stalk must live in Q^coeff_dim.
  CellSheaf(std::size_t coeff_dim, std::vector<Subspace> stalks);

  std::size_t coeff_dim() const { return coeff_dim_; }
  std::size_t cell_count() const { return stalks_.size(); }
  const Subspace& stalk(std::size_t cell_id) const { return stalks_.at(cell_id); }
  std::span<const Subspace> stalks() const { return stalks_; }

  /// Throws PreconditionError unless the sheaf has one stalk per cell of p.
  void require_on(const PolytopeComplex& p) const;

  friend bool operator==(const CellSheaf&, const CellSheaf&) = default;

 private:
  std::size_t coeff_dim_ = 0;
  std::vector<Subspace> stalks_;
};

/// Q^m on every cell.
CellSheaf constant_sheaf(const PolytopeComplex& p, std::size_t m);
/// R^i f_* Q: stalk ⋀^i D(α) inside ⋀^i Q^N.
CellSheaf moment_sheaf(const PolytopeComplex& p, std::size_t i);
/// S^i_P(A) on a single polytope P: stalk at γ is ⋀^i of the intersection of
/// D(a) over the facets a ∈ A whose closure contains γ (D(P) when there are
/// none). `facets` are cell ids of facets of P.
CellSheaf structural_sheaf(const PolytopeComplex& p, std::size_t i, std::span<const std::size_t> facets);

struct CompatibilityReport {
  bool passed = true;
  /// (α, β) with α a facet of β and stalk(α) ⊄ stalk(β).
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

CompatibilityReport check_cell_compatibility(const PolytopeComplex& p, const CellSheaf& s);

/// Copies the stalks of the cells of `sub` (matched by vertex set).
/// Throws PreconditionError if a cell of `sub` is not a cell of `p`.
CellSheaf restrict_sheaf(const PolytopeComplex& p, const CellSheaf& s, const PolytopeComplex& sub);

/// One step 0 → S^i_P(A_m) → S^i_P(A_{m-1}) → S^{i-1}_{a_m}(A') → 0 of a
/// facet peeling, with A' the (n-2)-faces a_j ∩ a_m, j < m.
struct PeelStep {
  std::size_t index = 0;  ///< m, 1-based
  std::size_t facet = 0;  ///< a_m (cell id in P)
  CellSheaf sheaf_before;
  CellSheaf sheaf_after;
  PolytopeComplex facet_complex;  ///< closure of a_m
  CellSheaf quotient_sheaf;       ///< on facet_complex
  bool exact = true;
  std::vector<std::string> failures;
};

struct PeelReport {
  std::vector<PeelStep> steps;
  bool exact = true;
  /// The orderings are never tested for contractibility of the A_m.
  bool contractibility_checked = false;
};

/// Throws PreconditionError for a non-simple P, for ids that are not facets,
/// and for repeated facets.
PeelReport peel_sequence(const PolytopeComplex& p, std::size_t i, std::span<const std::size_t> ordering);

/// Facets of the single polytope P, by id.
std::vector<std::size_t> facets_of_polytope(const PolytopeComplex& p);

}  // namespace brokentoric::sheaves
