#include "brokentoric/polytope/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "brokentoric/error.hpp"

namespace brokentoric::polytope {

using exactla::RationalMatrix;

namespace {

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<Rational> difference(const Point& a, const Point& b) {
  std::vector<Rational> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

Subspace direction_space(std::span<const Point> points) {
  const std::size_t n = points.empty() ? 0 : points.front().size();
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t j = 1; j < points.size(); ++j) diffs.push_back(difference(points[j], points[0]));
  return Subspace::span(n, diffs);
}

// Coordinates of a vector of D in the pivot columns of D's canonical basis.
std::vector<Rational> local_coordinates(const Subspace& space, std::span<const Rational> v) {
  std::vector<Rational> out;
  out.reserve(space.dim());
  for (auto p : space.pivots()) out.push_back(v[p]);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// conv(points) as facets and supporting half-spaces c·y >= b in the local
// coordinates of its direction space.
struct Hull {
  Point origin;
  Subspace space;
  std::vector<VertexSet> facets;
  std::vector<std::pair<std::vector<Rational>, Rational>> halfspaces;

  bool contains(const Point& x) const {
    const auto d = difference(x, origin);
    if (!space.contains_vector(d)) return false;
    const auto y = local_coordinates(space, d);
    for (const auto& [c, b] : halfspaces)
      if (dot(c, y) < b) return false;
    return true;
  }
};

Hull compute_hull(std::span<const Point> points) {
  Hull hull;
  if (points.empty()) throw InvalidComplex("cell with no vertices");
  hull.origin = points.front();
  hull.space = direction_space(points);
  const std::size_t d = hull.space.dim();
  if (d == 0) {
    if (points.size() > 1) throw InvalidComplex("cell lists the same point more than once");
    return hull;
  }

  std::vector<std::vector<Rational>> local;
  for (const auto& p : points) local.push_back(local_coordinates(hull.space, difference(p, hull.origin)));

  std::set<VertexSet> found;
  for (const auto& subset : exactla::lex_subsets(points.size(), d)) {
    const bool covered = std::any_of(found.begin(), found.end(), [&](const VertexSet& f) {
      return std::includes(f.begin(), f.end(), subset.begin(), subset.end());
    });
    if (covered) continue;

    RationalMatrix diffs(d - 1, d);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) diffs(r - 1, c) = local[subset[r]][c] - local[subset[0]][c];
    const Subspace normal_space = exactla::kernel_basis(diffs);
    if (normal_space.dim() != 1) continue;  // not affinely independent

    std::vector<Rational> normal(normal_space.basis().row(0).begin(), normal_space.basis().row(0).end());
    const Rational offset = dot(normal, local[subset[0]]);
    bool above = false;
    bool below = false;
    VertexSet incident;
    for (std::size_t v = 0; v < points.size(); ++v) {
      const int s = sgn(Rational(dot(normal, local[v]) - offset));
      if (s > 0) above = true;
      if (s < 0) below = true;
      if (s == 0) incident.push_back(v);
    }
    if (above && below) continue;
    if (below) {
      for (auto& x : normal) x = -x;
      hull.halfspaces.emplace_back(normal, -offset);
    } else {
      hull.halfspaces.emplace_back(normal, offset);
    }
    found.insert(incident);
    hull.facets.push_back(incident);
  }
  std::sort(hull.facets.begin(), hull.facets.end());
  return hull;
}

std::vector<Point> points_of(const std::vector<Point>& vertices, const VertexSet& ids) {
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (auto id : ids) pts.push_back(vertices[id]);
  return pts;
}

class LatticeBuilder {
 public:
  explicit LatticeBuilder(const std::vector<Point>& vertices) : vertices_(vertices) {}

  void explore(const VertexSet& cell) {
    if (lattice_.count(cell)) return;
    const auto pts = points_of(vertices_, cell);
    const Hull hull = compute_hull(pts);
    if (hull.space.dim() > 0) {
      for (std::size_t v = 0; v < cell.size(); ++v) {
        const bool on_facet = std::any_of(hull.facets.begin(), hull.facets.end(), [&](const VertexSet& f) {
          return std::binary_search(f.begin(), f.end(), v);
        });
        if (!on_facet) {
          throw InvalidComplex("degenerate cell " + describe(cell) + ": vertex " + std::to_string(cell[v]) +
                               " is not an extreme point");
        }
      }
    }
    std::vector<VertexSet> facets;
    for (const auto& local : hull.facets) {
      VertexSet global;
      for (auto i : local) global.push_back(cell[i]);
      facets.push_back(std::move(global));
    }
    std::sort(facets.begin(), facets.end());
    lattice_.emplace(cell, facets);
    for (const auto& f : facets) explore(f);
  }

  std::set<VertexSet> all_faces(const VertexSet& cell) const {
    std::set<VertexSet> out;
    std::vector<VertexSet> stack{cell};
    while (!stack.empty()) {
      VertexSet top = std::move(stack.back());
      stack.pop_back();
      if (!out.insert(top).second) continue;
      for (const auto& f : lattice_.at(top)) stack.push_back(f);
    }
    return out;
  }

  const std::map<VertexSet, std::vector<VertexSet>>& lattice() const { return lattice_; }

 private:
  const std::vector<Point>& vertices_;
  std::map<VertexSet, std::vector<VertexSet>> lattice_;
};

std::vector<std::vector<Rational>> affine_frame(const std::vector<Point>& vertices, const VertexSet& ids,
                                                std::size_t dim) {
  std::vector<std::vector<Rational>> frame;
  if (dim == 0) return frame;
  const std::size_t n = vertices[ids.front()].size();
  for (std::size_t j = 1; j < ids.size() && frame.size() < dim; ++j) {
    auto candidate = difference(vertices[ids[j]], vertices[ids.front()]);
    frame.push_back(candidate);
    if (exactla::rank(RationalMatrix::from_rows(frame, n)) < frame.size()) frame.pop_back();
  }
  return frame;
}

int determinant_sign(const Subspace& space, const std::vector<std::vector<Rational>>& vectors) {
  const std::size_t k = space.dim();
  RationalMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto y = local_coordinates(space, vectors[r]);
    for (std::size_t c = 0; c < k; ++c) m(r, c) = y[c];
  }
  return sgn(exactla::determinant(std::move(m)));
}

}  // namespace

PolytopeComplex::PolytopeComplex(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

std::span<const std::size_t> PolytopeComplex::cells_of_dim(std::size_t k) const {
  if (k >= by_dim_.size()) return {};
  return by_dim_[k];
}

int PolytopeComplex::incidence(std::size_t beta, std::size_t alpha) const {
  for (const auto& [f, s] : boundary_.at(beta))
    if (f == alpha) return s;
  return 0;
}

bool PolytopeComplex::is_face(std::size_t alpha, std::size_t beta) const {
  const auto& f = faces_.at(beta);
  return std::binary_search(f.begin(), f.end(), alpha);
}

std::optional<std::size_t> PolytopeComplex::find(const VertexSet& vertex_ids) const {
  auto it = index_.find(vertex_ids);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> PolytopeComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& d : by_dim_) f.push_back(d.size());
  return f;
}

std::vector<std::size_t> PolytopeComplex::maximal_cells() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_)
    if (cofacets_[c.id].empty()) out.push_back(c.id);
  return out;
}

bool PolytopeComplex::is_pure() const {
  const auto maximal = maximal_cells();
  return std::all_of(maximal.begin(), maximal.end(),
                     [&](std::size_t id) { return static_cast<int>(cells_[id].dim) == top_dim(); });
}

PolytopeComplex assemble(std::size_t ambient_dim, std::vector<Point> vertices,
                         const std::map<VertexSet, std::vector<VertexSet>>& lattice) {
  PolytopeComplex p(ambient_dim);
  p.vertices_ = std::move(vertices);

  std::map<VertexSet, std::size_t> dims;
  for (const auto& [cell, facets] : lattice) {
    // std::map iterates sets in lexicographic order, but a facet may sort
    // after its cell, so resolve dimensions recursively.
    std::vector<VertexSet> chain{cell};
    while (!lattice.at(chain.back()).empty()) chain.push_back(lattice.at(chain.back()).front());
    dims[cell] = chain.size() - 1;
  }

  std::vector<VertexSet> order;
  for (const auto& [cell, _] : lattice) order.push_back(cell);
  std::stable_sort(order.begin(), order.end(),
                   [&](const VertexSet& a, const VertexSet& b) { return dims[a] < dims[b]; });

  const std::size_t count = order.size();
  p.cells_.resize(count);
  p.boundary_.resize(count);
  p.cofacets_.resize(count);
  p.faces_.resize(count);
  for (std::size_t id = 0; id < count; ++id) p.index_[order[id]] = id;

  std::vector<std::vector<std::vector<Rational>>> frames(count);
  for (std::size_t id = 0; id < count; ++id) {
    Cell& c = p.cells_[id];
    c.id = id;
    c.dim = dims[order[id]];
    c.vertex_ids = order[id];
    for (const auto& f : lattice.at(order[id])) c.facet_ids.push_back(p.index_.at(f));
    std::sort(c.facet_ids.begin(), c.facet_ids.end());
    c.direction_space = direction_space(points_of(p.vertices_, c.vertex_ids));
    if (c.direction_space.dim() != c.dim) throw InternalError("cell dimension disagrees with its affine hull");
    frames[id] = affine_frame(p.vertices_, c.vertex_ids, c.dim);

    if (p.by_dim_.size() <= c.dim) p.by_dim_.resize(c.dim + 1);
    p.by_dim_[c.dim].push_back(id);
  }

  for (std::size_t id = 0; id < count; ++id) {
    const Cell& beta = p.cells_[id];
    std::vector<std::size_t> faces{id};
    for (auto f : beta.facet_ids) {
      faces.insert(faces.end(), p.faces_[f].begin(), p.faces_[f].end());
      p.cofacets_[f].push_back(id);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    p.faces_[id] = std::move(faces);

    if (beta.dim == 0) continue;
    const int beta_sign = determinant_sign(beta.direction_space, frames[id]);
    for (auto f : beta.facet_ids) {
      const Cell& alpha = p.cells_[f];
      const auto outside = std::find_if(beta.vertex_ids.begin(), beta.vertex_ids.end(), [&](std::size_t v) {
        return !std::binary_search(alpha.vertex_ids.begin(), alpha.vertex_ids.end(), v);
      });
      std::vector<std::vector<Rational>> oriented{
          difference(p.vertices_[alpha.vertex_ids.front()], p.vertices_[*outside])};
      oriented.insert(oriented.end(), frames[f].begin(), frames[f].end());
      const int sign = determinant_sign(beta.direction_space, oriented) * beta_sign;
      if (sign == 0) throw InternalError("degenerate orientation frame");
      p.boundary_[id].emplace_back(f, sign);
    }
  }

  // ∂∂ = 0
  for (std::size_t id = 0; id < count; ++id) {
    std::map<std::size_t, int> acc;
    for (const auto& [a, s1] : p.boundary_[id])
      for (const auto& [g, s2] : p.boundary_[a]) acc[g] += s1 * s2;
    for (const auto& [g, v] : acc) {
      if (v != 0) {
        throw InternalError("incidence signs violate d∘d = 0 between cells " + std::to_string(id) + " and " +
                            std::to_string(g));
      }
    }
  }
  return p;
}

std::vector<VertexSet> facets_of_cell(std::span<const Point> points) { return compute_hull(points).facets; }

PolytopeComplex build_complex(std::size_t ambient_dim, std::vector<Point> vertices,
                              const std::vector<VertexSet>& maximal_cells) {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].size() != ambient_dim) {
      throw InvalidComplex("vertex " + std::to_string(v) + " has " + std::to_string(vertices[v].size()) +
                           " coordinates, expected " + std::to_string(ambient_dim));
    }
  }
  std::vector<VertexSet> cells;
  for (auto cell : maximal_cells) {
    if (cell.empty()) throw InvalidComplex("maximal cell with no vertices");
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
      throw InvalidComplex("maximal cell " + describe(cell) + " repeats a vertex");
    if (cell.back() >= vertices.size())
      throw InvalidComplex("maximal cell " + describe(cell) + " references a missing vertex");
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  LatticeBuilder builder(vertices);
  for (const auto& cell : cells) builder.explore(cell);

  std::vector<std::set<VertexSet>> face_sets;
  std::vector<Hull> hulls;
  for (const auto& cell : cells) {
    face_sets.push_back(builder.all_faces(cell));
    hulls.push_back(compute_hull(points_of(vertices, cell)));
  }
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      VertexSet common;
      std::set_intersection(cells[a].begin(), cells[a].end(), cells[b].begin(), cells[b].end(),
                            std::back_inserter(common));
      if (!common.empty() && (!face_sets[a].count(common) || !face_sets[b].count(common))) {
        throw InvalidComplex("cells " + describe(cells[a]) + " and " + describe(cells[b]) +
                             " do not meet in a common face");
      }
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        for (auto v : cells[y]) {
          if (!std::binary_search(cells[x].begin(), cells[x].end(), v) && hulls[x].contains(vertices[v])) {
            throw InvalidComplex("vertex " + std::to_string(v) + " of cell " + describe(cells[y]) +
                                 " lies inside cell " + describe(cells[x]));
          }
        }
      }
    }
  }
  return assemble(ambient_dim, std::move(vertices), builder.lattice());
}

PolytopeComplex subcomplex(const PolytopeComplex& p, std::span<const std::size_t> cell_ids) {
  std::set<std::size_t> keep;
  for (auto id : cell_ids)
    for (auto f : p.faces(id)) keep.insert(f);
  std::map<VertexSet, std::vector<VertexSet>> lattice;
  for (auto id : keep) {
    std::vector<VertexSet> facets;
    for (auto f : p.cell(id).facet_ids) facets.push_back(p.cell(f).vertex_ids);
    lattice.emplace(p.cell(id).vertex_ids, std::move(facets));
  }
  return assemble(p.ambient_dim(), p.vertices(), lattice);
}

PolytopeComplex closure(const PolytopeComplex& p, std::size_t cell_id) {
  const std::size_t ids[] = {cell_id};
  return subcomplex(p, ids);
}

std::size_t single_top_cell(const PolytopeComplex& p) {
  const auto maximal = p.maximal_cells();
  if (maximal.size() != 1) {
    throw PreconditionError("expected the face lattice of a single polytope, found " +
                            std::to_string(maximal.size()) + " maximal cells");
  }
  return maximal.front();
}

bool is_simple(const PolytopeComplex& p) {
  const std::size_t top = single_top_cell(p);
  const Cell& polytope = p.cell(top);
  for (auto v : p.cells_of_dim(0)) {
    std::size_t incident = 0;
    for (auto f : polytope.facet_ids)
      if (p.is_face(v, f)) ++incident;
    if (incident != polytope.dim) return false;
  }
  return true;
}

SingularDecomposition singular_decomposition(const PolytopeComplex& p) {
  if (p.top_dim() < 1) throw PreconditionError("singular decomposition needs top dimension >= 1");
  const std::size_t n = static_cast<std::size_t>(p.top_dim());
  const auto tops = p.cells_of_dim(n);

  std::vector<std::size_t> seeds;
  for (const auto& c : p.cells()) {
    if (c.dim >= n) continue;
    const auto containing = std::count_if(tops.begin(), tops.end(), [&](std::size_t t) { return p.is_face(c.id, t); });
    if (containing != 1) seeds.push_back(c.id);
  }
  std::set<std::size_t> singular;
  for (auto s : seeds)
    for (auto f : p.faces(s)) singular.insert(f);

  SingularDecomposition out;
  out.singular_cells.assign(singular.begin(), singular.end());
  out.Y_complex = subcomplex(p, out.singular_cells);
  for (auto t : tops) {
    out.Xtilde.push_back(closure(p, t));
    std::vector<std::size_t> meet;
    for (auto f : p.faces(t))
      if (singular.count(f)) meet.push_back(f);
    out.Yfibre.push_back(subcomplex(p, meet));
  }
  for (auto m : out.Y_complex.maximal_cells()) {
    out.Ytilde.push_back(closure(p, *p.find(out.Y_complex.cell(m).vertex_ids)));
  }
  return out;
}

}  // namespace brokentoric::polytope
