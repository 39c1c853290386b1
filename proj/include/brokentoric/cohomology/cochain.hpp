#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "brokentoric/exactla/sparse.hpp"
#include "brokentoric/polytope/complex.hpp"
#include "brokentoric/sheaves/sheaf.hpp"

namespace brokentoric::cohomology {

using exactla::SparseMatrix;
using polytope::PolytopeComplex;
using sheaves::CellSheaf;

/// Names one coordinate of a cochain group: a cell (cellular engine) or a
/// chain of cells (bar engine) and an index into the stalk basis at its end.
struct BasisLabel {
  std::vector<std::size_t> cells;
  std::size_t basis_index = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// C^0 → C^1 → ... → C^top. differentials[k] : C^k → C^{k+1} is stored as
/// a (terms[k+1] × terms[k]) matrix.
struct CochainComplex {
  std::vector<std::size_t> terms;
  std::vector<SparseMatrix> differentials;
  std::vector<std::vector<BasisLabel>> basis_labels;

  /// Throws InternalError on a shape mismatch or d∘d ≠ 0.
  void validate() const;
  /// Σ (-1)^k dim C^k.
  long euler_characteristic() const;
};

struct BettiVector {
  std::vector<std::size_t> dims;

  long euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

enum class Engine { cellular, bar, both };

Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine);

/// Signed cellular cochains: C^k = ⊕ stalks of k-cells, blocks
/// [β:α]·(inclusion stalk(α) ↪ stalk(β)).
CochainComplex cellular_complex(const PolytopeComplex& p, const CellSheaf& s);

/// Derived-limit cochains over the face poset: C^k = ⊕ over chains
/// γ_0 < ... < γ_k of stalk(γ_k).
CochainComplex bar_complex(const PolytopeComplex& p, const CellSheaf& s);

/// h^k = dim C^k - rank d^k - rank d^{k-1}.
BettiVector betti(const CochainComplex& c);

/// With Engine::both, runs both engines and throws InternalError if they
/// disagree.
BettiVector sheaf_cohomology(const PolytopeComplex& p, const CellSheaf& s, Engine engine = Engine::both);

}  // namespace brokentoric::cohomology
