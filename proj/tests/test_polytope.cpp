#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "brokentoric/error.hpp"
#include "brokentoric/polytope/complex.hpp"
#include "brokentoric/polytope/generators.hpp"
#include "support.hpp"

using namespace brokentoric;
using namespace brokentoric::polytope;
using support::choose;
using support::q;

namespace {

using FVector = std::vector<std::size_t>;

FVector product_f_vector(const FVector& a, const FVector& b) {
  FVector f(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) f[i + j] += a[i] * b[j];
  return f;
}

long euler(const FVector& f) {
  long chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(f[k]);
  return chi;
}

void check_boundary_squares_to_zero(const PolytopeComplex& p) {
  for (const auto& beta : p.cells()) {
    std::map<std::size_t, int> total;
    for (const auto& [alpha, s] : p.boundary(beta.id)) {
      CHECK((s == 1 || s == -1));
      for (const auto& [gamma, t] : p.boundary(alpha)) total[gamma] += s * t;
    }
    for (const auto& [gamma, v] : total) CHECK(v == 0);
  }
}

}  // namespace

TEST_CASE("f-vectors of the standard solids") {
  for (std::size_t n = 0; n <= 4; ++n) {
    FVector cube_f, simplex_f;
    for (std::size_t k = 0; k <= n; ++k) {
      cube_f.push_back(choose(n, k) << (n - k));
      simplex_f.push_back(choose(n + 1, k + 1));
    }
    CHECK(cube(n).f_vector() == cube_f);
    CHECK(simplex(n).f_vector() == simplex_f);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    FVector f;
    for (std::size_t k = 0; k < n; ++k) f.push_back(choose(n, k + 1) << (k + 1));
    f.push_back(1);
    CHECK(cross_polytope(n).f_vector() == f);
  }
  for (std::size_t k = 3; k <= 8; ++k) CHECK(polygon(k).f_vector() == FVector{k, k, 1});
  CHECK(pyramid(4).f_vector() == FVector{5, 8, 5, 1});
  CHECK(pyramid(3).f_vector() == FVector{4, 6, 4, 1});
}

TEST_CASE("Euler relation for solids and their boundaries") {
  for (const auto& p : {cube(3), simplex(4), cross_polytope(3), pyramid(5), polygon(7), cube(4)}) {
    CHECK(euler(p.f_vector()) == 1);
    const long n = p.top_dim();
    CHECK(euler(boundary(p).f_vector()) == 1 + ((n - 1) % 2 ? -1 : 1));
  }
}

TEST_CASE("signed boundary squares to zero") {
  for (const auto& p : {cube(3), cube(4), simplex(4), cross_polytope(3), pyramid(4), two_triangles(), necklace(),
                        product(polygon(3), polygon(5))})
    check_boundary_squares_to_zero(p);
}

TEST_CASE("incidence and face queries") {
  const auto p = cube(2);
  const auto top = single_top_cell(p);
  CHECK(p.cell(top).dim == 2);
  CHECK(p.faces(top).size() == p.cell_count());
  CHECK(p.cofacets(top).empty());
  const auto edge = p.find({0, 1});
  REQUIRE(edge);
  CHECK(p.incidence(top, *edge) != 0);
  CHECK(p.is_face(*edge, top));
  CHECK_FALSE(p.is_face(top, *edge));
  CHECK(p.incidence(*edge, top) == 0);
  CHECK_FALSE(p.find({0, 3}));
  CHECK(p.maximal_cells() == std::vector<std::size_t>{top});
  CHECK(p.is_pure());
}

TEST_CASE("facets of a cell from its points") {
  const std::vector<Point> square{{q(0), q(0)}, {q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}};
  CHECK(facets_of_cell(square) == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const std::vector<Point> segment{{q(0), q(0), q(1)}, {q(2), q(1), q(1)}};
  CHECK(facets_of_cell(segment) == std::vector<VertexSet>{{0}, {1}});
  CHECK(facets_of_cell(std::vector<Point>{{q(5)}}).empty());
}

TEST_CASE("simplicity") {
  CHECK(is_simple(cube(3)));
  CHECK(is_simple(cube(4)));
  CHECK(is_simple(simplex(4)));
  CHECK(is_simple(polygon(6)));
  CHECK(is_simple(pyramid(3)));
  CHECK(is_simple(product(polygon(3), polygon(4))));
  CHECK_FALSE(is_simple(cross_polytope(3)));
  CHECK_FALSE(is_simple(pyramid(4)));
}

TEST_CASE("derived complexes") {
  const auto sk = skeleton(cube(3), 2);
  CHECK(sk.f_vector() == FVector{8, 12, 6});
  CHECK(sk.cell_count() == 26);
  CHECK(boundary(cube(3)) == sk);
  CHECK(product(polygon(3), polygon(4)).f_vector() == product_f_vector({3, 3, 1}, {4, 4, 1}));
  CHECK(product(cube(1), cube(2)).f_vector() == cube(3).f_vector());
  CHECK(necklace().f_vector() == FVector{3, 3});
  CHECK(two_triangles().f_vector() == FVector{4, 5, 2});
  CHECK(generate("cube", 3) == cube(3));
  CHECK_THROWS_AS(generate("dodecahedron", 3), PreconditionError);
  CHECK_THROWS_AS(generate("polygon", 2), PreconditionError);
}

TEST_CASE("subcomplexes and closures") {
  const auto p = cube(3);
  const auto square = *p.find({0, 1, 2, 3});
  const auto c = closure(p, square);
  CHECK(c.f_vector() == FVector{4, 4, 1});
  const auto edges = p.cells_of_dim(1);
  const std::vector<std::size_t> two_edges{edges[0], edges[1]};
  const auto s = subcomplex(p, two_edges);
  CHECK(s.top_dim() == 1);
  CHECK(s.vertices() == p.vertices());
  CHECK(subcomplex(p, std::vector<std::size_t>{}).empty());
}

TEST_CASE("construction is deterministic and independent of input order") {
  const auto a = cube(3);
  CHECK(a == cube(3));

  // Same square with the two cells listed in the other order.
  std::vector<Point> v{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
  const auto x = build_complex(2, v, {{0, 1, 2}, {1, 2, 3}});
  const auto y = build_complex(2, v, {{1, 2, 3}, {0, 1, 2}});
  CHECK(x == y);
}

TEST_CASE("invalid complexes are rejected") {
  std::vector<Point> v{{q(0), q(0)}, {q(1), q(0)}, {q(2), q(0)}, {q(0), q(1)}};
  // Midpoint listed as a vertex of the triangle.
  CHECK_THROWS_AS(build_complex(2, v, {{0, 1, 2, 3}}), InvalidComplex);
  // Collinear points cannot span a triangle.
  CHECK_THROWS_AS(build_complex(2, v, {{0, 1, 2}}), InvalidComplex);

  // Overlapping triangles.
  std::vector<Point> w{{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}, {q(1), q(1, 2)}, {q(3), q(3)}};
  CHECK_THROWS_AS(build_complex(2, w, {{0, 1, 2}, {1, 2, 3}}), InvalidComplex);

  // Squares meeting along half an edge.
  std::vector<Point> u{{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}, {q(2), q(2)},
                       {q(2), q(1)}, {q(4), q(1)}, {q(2), q(3)}, {q(4), q(3)}};
  CHECK_THROWS_AS(build_complex(2, u, {{0, 1, 2, 3}, {4, 5, 6, 7}}), InvalidComplex);

  CHECK_THROWS_AS(single_top_cell(necklace()), PreconditionError);
}

TEST_CASE("singular decomposition of the fixtures") {
  const auto n = singular_decomposition(necklace());
  CHECK(n.Y_complex.f_vector() == FVector{3});
  CHECK(n.Xtilde.size() == 3);
  CHECK(n.Ytilde.size() == 3);
  CHECK(n.Yfibre.size() == 3);
  for (const auto& f : n.Yfibre) CHECK(f.f_vector() == FVector{2});

  const auto t = singular_decomposition(two_triangles());
  CHECK(t.Y_complex.f_vector() == FVector{2, 1});
  CHECK(t.Xtilde.size() == 2);
  CHECK(t.Ytilde.size() == 1);
  for (const auto& f : t.Yfibre) CHECK(f.f_vector() == FVector{2, 1});

  const auto s = singular_decomposition(cube(3));
  CHECK(s.Y_complex.empty());
  CHECK(s.Xtilde.size() == 1);
}
