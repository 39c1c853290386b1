#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <json.hpp>

#include "brokentoric/error.hpp"
#include "brokentoric/invariants/invariants.hpp"
#include "brokentoric/polytope/generators.hpp"
#include "support.hpp"

using namespace brokentoric;
using namespace brokentoric::invariants;
using support::choose;
using Dims = std::vector<std::size_t>;
using Grid = std::vector<std::vector<std::size_t>>;

namespace {

nlohmann::json oracles() {
  static const auto data = nlohmann::json::parse(cli::read_file(support::golden_path("oracles.json")));
  return data;
}

Grid diagonal(const std::vector<std::size_t>& d) {
  Grid g(d.size(), Dims(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return g;
}

// Coefficients of a product of polynomials given by coefficient lists.
std::vector<std::int64_t> poly_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("E2 page of solid simple polytopes is diagonal with binomial and unit entries") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Dims cube_diag, simplex_diag(n + 1, 1);
    for (std::size_t i = 0; i <= n; ++i) cube_diag.push_back(choose(n, i));
    CHECK(e2_page(polytope::cube(n)).grid == diagonal(cube_diag));
    CHECK(e2_page(polytope::simplex(n)).grid == diagonal(simplex_diag));
  }
  CHECK(e2_page(polytope::polygon(6)).grid == diagonal({1, 4, 1}));
}

TEST_CASE("h-vector formula") {
  CHECK(h_vector_formula(polytope::cube(3)) == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(h_vector_formula(polytope::simplex(4)) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(h_vector_formula(polytope::polygon(7)) == std::vector<std::int64_t>{1, 5, 1});
  // h-polynomials multiply under products.
  CHECK(h_vector_formula(polytope::product(polytope::polygon(3), polytope::polygon(5))) ==
        poly_product({1, 1, 1}, {1, 3, 1}));
  CHECK_THROWS_AS(h_vector_formula(polytope::pyramid(4)), PreconditionError);
}

TEST_CASE("hand-derived Betti oracles") {
  const auto o = oracles();
  const auto necklace = support::load_golden("example-2.6.json");
  const auto triangles = support::load_golden("example-2.7.json");
  const auto skeleton = support::load_golden("cube3-skeleton2.json");

  CHECK(e2_page(necklace).grid == o["example-2.6"]["e2"].get<Grid>());
  CHECK(betti_broken_toric(necklace).dims == o["example-2.6"]["betti"].get<Dims>());
  CHECK(e2_page(triangles).grid == o["example-2.7"]["e2"].get<Grid>());
  CHECK(betti_broken_toric(triangles).dims == o["example-2.7"]["betti"].get<Dims>());
  CHECK(e2_page(skeleton).grid == o["cube3-skeleton2"]["e2"].get<Grid>());
  CHECK(betti_broken_toric(skeleton).dims == o["cube3-skeleton2"]["betti"].get<Dims>());
}

TEST_CASE("engines give the same E2 page") {
  for (const auto& p : {polytope::pyramid(4), polytope::skeleton(polytope::cube(3), 2), polytope::two_triangles()})
    CHECK(e2_page(p, Engine::cellular) == e2_page(p, Engine::bar));
}

TEST_CASE("thread budget does not change results") {
  const auto p = polytope::cube(3);
  ::setenv("BROKENTORIC_THREADS", "1", 1);
  CHECK(thread_budget() == 1);
  const auto serial = e2_page(p);
  ::setenv("BROKENTORIC_THREADS", "4", 1);
  CHECK(thread_budget() == 4);
  CHECK(e2_page(p) == serial);
  ::setenv("BROKENTORIC_THREADS", "zero", 1);
  CHECK(thread_budget() >= 1);
  ::unsetenv("BROKENTORIC_THREADS");
}

TEST_CASE("Leray filtration of the necklace") {
  const auto table = leray_weight_table(e2_page(polytope::necklace()));
  CHECK(table.n == 1);
  CHECK(table.leray == Grid{{1, 1}, {1, 1}, {0, 3}});
  // W_{2k} = W_{2k+1} = L_k.
  CHECK(table.weight(2, 0) == 0);
  CHECK(table.weight(2, 1) == 0);
  CHECK(table.weight(2, 2) == 3);
  CHECK(table.weight(2, 3) == 3);
  CHECK(table.weight(2, 9) == 3);
  CHECK(table.weight(1, 0) == 1);
}

TEST_CASE("Leray filtration ends at the Betti numbers") {
  for (const auto& p : {polytope::two_triangles(), polytope::skeleton(polytope::cube(3), 2), polytope::pyramid(4)}) {
    const auto e2 = e2_page(p);
    const auto table = leray_weight_table(e2);
    const auto b = betti_broken_toric(e2);
    for (std::size_t i = 0; i < table.leray.size(); ++i) {
      CHECK(table.leray[i].back() == b.dims[i]);
      for (std::size_t k = 0; k <= table.n; ++k) CHECK(table.weight(i, 2 * k) == table.weight(i, 2 * k + 1));
    }
  }
}

TEST_CASE("vanishing checks") {
  const auto pyr = polytope::pyramid(4);
  const auto report = verify_vanishing(pyr, e2_page(pyr), VanishingMode::toric_diagonal);
  REQUIRE(report.checks.size() == 2);
  CHECK(report.checks[0].passed);
  CHECK(report.checks[1].skipped);
  CHECK(report.passed());

  const auto c = polytope::cube(3);
  const auto toric = verify_vanishing(c, e2_page(c), VanishingMode::toric_diagonal);
  CHECK(toric.passed());
  CHECK(toric.checks.size() == 3);

  // A tampered page fails.
  auto bad = e2_page(c);
  bad.grid[0][1] = 1;
  bad.grid[2][0] = 1;
  const auto failed = verify_vanishing(c, bad, VanishingMode::toric_diagonal);
  CHECK_FALSE(failed.checks[0].passed);
  CHECK_FALSE(failed.checks[1].passed);
}

TEST_CASE("skeletal formula predicts skeleton E2 pages") {
  const std::vector<std::pair<polytope::PolytopeComplex, std::size_t>> cases{
      {polytope::polygon(3), 1}, {polytope::polygon(4), 1}, {polytope::cube(3), 2}, {polytope::cube(3), 1},
      {polytope::simplex(3), 2}, {polytope::simplex(4), 2}, {polytope::pyramid(4), 2}, {polytope::pyramid(4), 1}};
  for (const auto& [parent, n] : cases) {
    const auto prediction = skeletal_formula(parent, n);
    const auto e2 = e2_page(polytope::skeleton(parent, n));
    SignedGrid actual(e2.grid.size());
    for (std::size_t p = 0; p < e2.grid.size(); ++p)
      for (auto x : e2.grid[p]) actual[p].push_back(static_cast<std::int64_t>(x));
    CHECK(prediction.general == actual);
    CHECK(prediction.simple.has_value() == polytope::is_simple(parent));
    if (prediction.simple) CHECK(*prediction.simple == actual);
  }
  CHECK_THROWS_AS(skeletal_formula(polytope::cube(3), 3), PreconditionError);
  CHECK_THROWS_AS(skeletal_formula(polytope::necklace(), 0), PreconditionError);
}

TEST_CASE("closed-form Betti numbers of boundary complexes") {
  const auto triangle = skeletal_closed_form(polytope::polygon(3));
  CHECK(triangle.corrected == std::vector<std::int64_t>{1, 1, 3});
  CHECK(triangle.printed == std::vector<std::int64_t>{1, 1, 7});

  const auto cube = skeletal_closed_form(polytope::cube(3));
  CHECK(cube.corrected == std::vector<std::int64_t>{1, 0, 4, 3, 6});
  CHECK(cube.printed[2] == -2);

  for (const auto& parent : {polytope::polygon(4), polytope::polygon(6), polytope::simplex(3), polytope::simplex(4),
                             polytope::cube(4)}) {
    const auto closed = skeletal_closed_form(parent);
    const auto b = betti_broken_toric(polytope::boundary(parent));
    CHECK(closed.corrected == std::vector<std::int64_t>(b.dims.begin(), b.dims.end()));
  }
  CHECK_THROWS_AS(skeletal_closed_form(polytope::pyramid(4)), PreconditionError);
}

TEST_CASE("Euler characteristic equals the vertex count") {
  for (const auto& p : {polytope::necklace(), polytope::two_triangles(), polytope::pyramid(4), polytope::cube(4),
                        polytope::skeleton(polytope::simplex(4), 2)}) {
    const auto report = euler_check(p, e2_page(p));
    CHECK(report.passed());
  }
}

TEST_CASE("Mayer-Vietoris identity on the fixtures") {
  const auto o = oracles();
  for (const auto& [name, file] : {std::pair{"example-2.6", "example-2.6.json"}, {"example-2.7", "example-2.7.json"}}) {
    const auto p = support::load_golden(file);
    const auto pieces = polytope::singular_decomposition(p);
    const auto expected = o[name]["mayer_vietoris"];
    for (std::size_t i = 0; i < expected.size(); ++i) {
      auto chi = [&](const polytope::PolytopeComplex& c) {
        return cohomology::sheaf_cohomology(c, sheaves::moment_sheaf(c, i)).euler_characteristic();
      };
      long xt = 0, yf = 0;
      for (const auto& c : pieces.Xtilde) xt += chi(c);
      for (const auto& c : pieces.Yfibre) yf += chi(c);
      CHECK(chi(p) == expected[i][0].get<long>());
      CHECK(chi(pieces.Y_complex) == expected[i][1].get<long>());
      CHECK(xt == expected[i][2].get<long>());
      CHECK(yf == expected[i][3].get<long>());
    }
    CHECK(mayer_vietoris_check(p).passed());
  }
  CHECK(mayer_vietoris_check(polytope::skeleton(polytope::cube(3), 2)).passed());
  CHECK(mayer_vietoris_check(polytope::pyramid(4)).passed());
}

TEST_CASE("reports") {
  Report r;
  r.add("a", true);
  r.skip("b", "why");
  CHECK(r.passed());
  Report s;
  s.add("c", false, "detail");
  r.append(s);
  CHECK_FALSE(r.passed());
  CHECK(r.checks.size() == 3);
}
