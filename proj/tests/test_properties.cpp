#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brokentoric/invariants/invariants.hpp"
#include "brokentoric/polytope/generators.hpp"
#include "support.hpp"

using namespace brokentoric;
using polytope::Point;
using polytope::PolytopeComplex;
using polytope::VertexSet;
using support::q;

namespace {

struct Raw {
  std::size_t ambient = 0;
  std::vector<Point> vertices;
  std::vector<VertexSet> cells;
};

Raw raw(const PolytopeComplex& p) {
  Raw r{p.ambient_dim(), p.vertices(), {}};
  for (auto id : p.maximal_cells()) r.cells.push_back(p.cell(id).vertex_ids);
  return r;
}

// Shuffles the vertex numbering and the cell order.
Raw relabel(const Raw& r, std::mt19937& rng) {
  std::vector<std::size_t> perm(r.vertices.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Raw out{r.ambient, std::vector<Point>(r.vertices.size()), {}};
  for (std::size_t v = 0; v < perm.size(); ++v) out.vertices[perm[v]] = r.vertices[v];
  for (const auto& c : r.cells) {
    VertexSet mapped;
    for (auto v : c) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    out.cells.push_back(mapped);
  }
  std::shuffle(out.cells.begin(), out.cells.end(), rng);
  return out;
}

// x -> A x + b with A invertible over Q, then padded with `extra` coordinates
// equal to a fixed linear combination of the others.
Raw transform(const Raw& r, const std::vector<std::vector<long>>& a, const std::vector<long>& b, std::size_t extra) {
  Raw out{r.ambient + extra, {}, r.cells};
  for (const auto& v : r.vertices) {
    Point w(r.ambient + extra);
    for (std::size_t i = 0; i < r.ambient; ++i) {
      w[i] = q(b[i]);
      for (std::size_t j = 0; j < r.ambient; ++j) w[i] += q(a[i][j]) * v[j];
    }
    for (std::size_t e = 0; e < extra; ++e) {
      w[r.ambient + e] = 0;
      for (std::size_t i = 0; i < r.ambient; ++i) w[r.ambient + e] += q(static_cast<long>(i + e + 1), 3) * w[i];
    }
    out.vertices.push_back(std::move(w));
  }
  return out;
}

PolytopeComplex build(const Raw& r) { return polytope::build_complex(r.ambient, r.vertices, r.cells); }

}  // namespace

TEST_CASE("invariants do not depend on labelling or embedding") {
  std::mt19937 rng(20240601);
  const std::vector<std::vector<long>> shear2{{1, 2}, {0, 1}};
  const std::vector<std::vector<long>> shear3{{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
  for (const auto& p : {polytope::necklace(), polytope::two_triangles(), polytope::skeleton(polytope::cube(3), 2),
                        polytope::pyramid(4), polytope::cube(3)}) {
    const auto e2 = invariants::e2_page(p);
    const auto base = raw(p);
    const auto& a = p.ambient_dim() == 2 ? shear2 : shear3;
    const std::vector<long> b(p.ambient_dim(), 5);
    for (int trial = 0; trial < 2; ++trial) {
      const auto moved = build(transform(relabel(base, rng), a, b, trial));
      CHECK(moved.f_vector() == p.f_vector());
      CHECK(invariants::e2_page(moved) == e2);
    }
  }
}

TEST_CASE("random subcomplexes of skeleta") {
  std::mt19937 rng(314159);
  const std::vector<PolytopeComplex> parents{polytope::cube(3), polytope::simplex(4)};
  for (int trial = 0; trial < 25; ++trial) {
    const auto& parent = parents[trial % 2];
    const std::size_t k = 1 + rng() % static_cast<std::size_t>(parent.top_dim() - 1);
    const auto sk = polytope::skeleton(parent, k);

    std::vector<std::size_t> chosen;
    for (auto id : sk.maximal_cells())
      if (rng() % 3 != 0) chosen.push_back(id);
    if (chosen.empty()) chosen.push_back(sk.maximal_cells().front());
    const auto sub = polytope::subcomplex(sk, chosen);
    CAPTURE(trial);
    CAPTURE(k);

    const auto e2 = invariants::e2_page(sub, cohomology::Engine::both);
    CHECK(invariants::euler_check(sub, e2).passed());
    CHECK(invariants::verify_vanishing(sub, e2, invariants::VanishingMode::lower).passed());
    CHECK(invariants::mayer_vietoris_check(sub).passed());
  }
}
