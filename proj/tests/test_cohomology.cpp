#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brokentoric/cohomology/cochain.hpp"
#include "brokentoric/error.hpp"
#include "brokentoric/polytope/generators.hpp"
#include "support.hpp"

using namespace brokentoric;
using namespace brokentoric::cohomology;
using polytope::PolytopeComplex;
using Dims = std::vector<std::size_t>;

namespace {

Dims h(const PolytopeComplex& p, const CellSheaf& s, Engine e = Engine::both) { return sheaf_cohomology(p, s, e).dims; }

}  // namespace

TEST_CASE("constant sheaf gives the cohomology of the underlying space") {
  // Solid polytopes are contractible, boundaries are spheres.
  for (const auto& p : {polytope::cube(3), polytope::simplex(4), polytope::pyramid(4), polytope::cross_polytope(3)}) {
    const std::size_t n = static_cast<std::size_t>(p.top_dim());
    Dims point(n + 1, 0);
    point[0] = 1;
    CHECK(h(p, sheaves::constant_sheaf(p, 1)) == point);

    const auto b = polytope::boundary(p);
    Dims sphere(n, 0);
    sphere[0] += 1;
    sphere[n - 1] += 1;
    CHECK(h(b, sheaves::constant_sheaf(b, 1)) == sphere);
  }
  // Circle with Q^2 coefficients.
  const auto c = polytope::necklace();
  CHECK(h(c, sheaves::constant_sheaf(c, 2)) == Dims{2, 2});
}

TEST_CASE("moment sheaf cohomology of the fixtures") {
  const auto n = polytope::necklace();
  CHECK(h(n, sheaves::moment_sheaf(n, 0)) == Dims{1, 1});
  CHECK(h(n, sheaves::moment_sheaf(n, 1)) == Dims{0, 3});

  const auto t = polytope::two_triangles();
  CHECK(h(t, sheaves::moment_sheaf(t, 0)) == Dims{1, 0, 0});
  CHECK(h(t, sheaves::moment_sheaf(t, 1)) == Dims{0, 1, 0});
  CHECK(h(t, sheaves::moment_sheaf(t, 2)) == Dims{0, 0, 2});
}

TEST_CASE("cochain complexes are complexes with the expected Euler characteristic") {
  for (const auto& p : {polytope::cube(3), polytope::skeleton(polytope::cube(3), 2), polytope::two_triangles()}) {
    for (std::size_t i = 0; i <= p.ambient_dim(); ++i) {
      const auto s = sheaves::moment_sheaf(p, i);
      const auto cellular = cellular_complex(p, s);
      const auto bar = bar_complex(p, s);
      CHECK_NOTHROW(cellular.validate());
      CHECK_NOTHROW(bar.validate());
      // Both compute the same cohomology, so their Euler characteristics agree.
      CHECK(cellular.euler_characteristic() == bar.euler_characteristic());
      CHECK(betti(cellular).euler_characteristic() == cellular.euler_characteristic());

      long chi = 0;
      for (const auto& c : p.cells()) chi += (c.dim % 2 ? -1L : 1L) * static_cast<long>(s.stalk(c.id).dim());
      CHECK(cellular.euler_characteristic() == chi);
      CHECK(cellular.basis_labels.size() == cellular.terms.size());
      for (std::size_t k = 0; k < cellular.terms.size(); ++k) CHECK(cellular.basis_labels[k].size() == cellular.terms[k]);
    }
  }
}

TEST_CASE("engines agree on structural and restricted sheaves") {
  const auto p = polytope::cube(3);
  const auto facets = sheaves::facets_of_polytope(p);
  for (std::size_t count = 0; count <= facets.size(); ++count) {
    const std::vector<std::size_t> a(facets.begin(), facets.begin() + static_cast<std::ptrdiff_t>(count));
    for (std::size_t i = 0; i <= 3; ++i) {
      const auto s = sheaves::structural_sheaf(p, i, a);
      CHECK(h(p, s, Engine::cellular) == h(p, s, Engine::bar));
    }
  }
}

TEST_CASE("engine selection and preconditions") {
  CHECK(parse_engine("bar") == Engine::bar);
  CHECK(to_string(Engine::cellular) == "cellular");
  CHECK_THROWS_AS(parse_engine("spectral"), PreconditionError);

  const auto p = polytope::necklace();
  std::vector<exactla::Subspace> stalks(p.cell_count(), exactla::Subspace::zero(1));
  stalks[0] = exactla::Subspace::full(1);
  CHECK_THROWS_AS(sheaf_cohomology(p, sheaves::CellSheaf(1, stalks)), PreconditionError);

  const PolytopeComplex empty(2);
  CHECK(sheaf_cohomology(empty, sheaves::CellSheaf(1, {})).dims.empty());
}
