#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brokentoric/exactla/subspace.hpp"

namespace brokentoric::polytope {

using exactla::Rational;
using exactla::Subspace;
using Point = std::vector<Rational>;
using VertexSet = std::vector<std::size_t>;

/// A closed polytopal cell, identified within its complex by its vertex set.
struct Cell {
  std::size_t id = 0;
  std::size_t dim = 0;
  VertexSet vertex_ids;                ///< sorted
  std::vector<std::size_t> facet_ids;  ///< sorted
  Subspace direction_space;            ///< span of v - v0 over the cell's vertices

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// An embedded polytope complex with its full face lattice.
///
/// Cells are numbered by (dimension, sorted vertex ids). Each cell is
/// oriented by the affine frame of its lexicographically first affinely
/// independent vertices; incidence signs compare the outward-normal-first
/// frame of a facet against the frame of the cell, which makes the signed
/// boundary square to zero (checked when the complex is assembled).
///
/// The vertex list may contain points that belong to no cell (subcomplexes
/// keep their parent's vertex numbering); only 0-cells count as vertices of
/// the complex.
class PolytopeComplex {
 public:
  /// The empty complex in Q^ambient_dim.
  explicit PolytopeComplex(std::size_t ambient_dim = 0);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  /// -1 for the empty complex.
  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return cells_.empty(); }

  std::span<const Cell> cells() const { return cells_; }
  const Cell& cell(std::size_t id) const { return cells_.at(id); }
  std::size_t cell_count() const { return cells_.size(); }
  std::span<const std::size_t> cells_of_dim(std::size_t k) const;

  /// Signed facets (α, [β:α]) of β.
  std::span<const std::pair<std::size_t, int>> boundary(std::size_t beta) const { return boundary_.at(beta); }
  /// [β:α]; 0 when α is not a facet of β.
  int incidence(std::size_t beta, std::size_t alpha) const;
  /// Cells having α as a facet.
  std::span<const std::size_t> cofacets(std::size_t alpha) const { return cofacets_.at(alpha); }
  /// All faces of the cell, itself included, sorted by id.
  std::span<const std::size_t> faces(std::size_t id) const { return faces_.at(id); }
  bool is_face(std::size_t alpha, std::size_t beta) const;

  std::optional<std::size_t> find(const VertexSet& vertex_ids) const;
  /// Number of cells per dimension, 0..top_dim.
  std::vector<std::size_t> f_vector() const;
  /// Cells that are not a facet of anything, by id.
  std::vector<std::size_t> maximal_cells() const;
  bool is_pure() const;

  friend bool operator==(const PolytopeComplex&, const PolytopeComplex&) = default;

 private:
  friend PolytopeComplex assemble(std::size_t, std::vector<Point>, const std::map<VertexSet, std::vector<VertexSet>>&);

  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary_;
  std::vector<std::vector<std::size_t>> cofacets_;
  std::vector<std::vector<std::size_t>> faces_;
  std::map<VertexSet, std::size_t> index_;
};

/// Builds the complex generated by the given maximal cells.
/// Throws InvalidComplex for degenerate cells (a listed vertex that is not an
/// extreme point) and for cells that do not meet in a common face.
PolytopeComplex build_complex(std::size_t ambient_dim, std::vector<Point> vertices,
                              const std::vector<VertexSet>& maximal_cells);

/// Facets of the polytope conv(points) as index subsets into `points`, each
/// sorted, in lexicographic order. A single point has no facets.
std::vector<VertexSet> facets_of_cell(std::span<const Point> points);

/// The closed subcomplex generated by `cell_ids` (all their faces).
PolytopeComplex subcomplex(const PolytopeComplex& p, std::span<const std::size_t> cell_ids);
PolytopeComplex closure(const PolytopeComplex& p, std::size_t cell_id);

/// The unique top cell of a single-polytope complex; throws
/// PreconditionError when the complex is not the face lattice of one polytope.
std::size_t single_top_cell(const PolytopeComplex& p);

/// True iff every vertex of the polytope lies in exactly n facets.
bool is_simple(const PolytopeComplex& p);

/// Pieces of the gluing square X̃ → X ← Y of a complex of top dimension n.
struct SingularDecomposition {
  /// Closed subcomplex on which the normalization X̃ → X fails to be
  /// one-to-one: cells of dimension < n lying in ≠ 1 top cells, closed.
  PolytopeComplex Y_complex;
  std::vector<std::size_t> singular_cells;  ///< ids (in X) of the cells of Y
  /// One closed top cell per entry.
  std::vector<PolytopeComplex> Xtilde;
  /// Normalization of Y: one closed complex per maximal cell of Y.
  std::vector<PolytopeComplex> Ytilde;
  /// Fibre product X̃ ×_X Y: for each top cell A, the closed A ∩ Y (possibly empty).
  std::vector<PolytopeComplex> Yfibre;
};

SingularDecomposition singular_decomposition(const PolytopeComplex& p);

}  // namespace brokentoric::polytope
