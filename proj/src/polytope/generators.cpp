#include "brokentoric/polytope/generators.hpp"

#include <numeric>
#include <string>

#include "brokentoric/error.hpp"

namespace brokentoric::polytope {

namespace {

using exactla::make_rational;

PolytopeComplex solid(std::size_t ambient, std::vector<Point> vertices) {
  VertexSet all(vertices.size());
  std::iota(all.begin(), all.end(), 0);
  return build_complex(ambient, std::move(vertices), {all});
}

Point integer_point(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

}  // namespace

PolytopeComplex simplex(std::size_t n) {
  std::vector<Point> vertices{Point(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, Rational(0));
    e[i] = 1;
    vertices.push_back(std::move(e));
  }
  return solid(n, std::move(vertices));
}

PolytopeComplex cube(std::size_t n) {
  std::vector<Point> vertices;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (bits >> (n - 1 - i)) & 1U;
    vertices.push_back(std::move(p));
  }
  return solid(n, std::move(vertices));
}

PolytopeComplex cross_polytope(std::size_t n) {
  if (n == 0) throw PreconditionError("cross_polytope needs n >= 1");
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      Point e(n, Rational(0));
      e[i] = s;
      vertices.push_back(std::move(e));
    }
  }
  return solid(n, std::move(vertices));
}

PolytopeComplex polygon(std::size_t k) {
  if (k < 3) throw PreconditionError("polygon needs k >= 3");
  std::vector<Point> vertices;
  if (k == 3) {
    vertices = {integer_point({0, 0}), integer_point({1, 0}), integer_point({0, 1})};
  } else if (k == 4) {
    vertices = {integer_point({0, 0}), integer_point({1, 0}), integer_point({1, 1}), integer_point({0, 1})};
  } else {
    // ((1-t^2)/(1+t^2), 2t/(1+t^2)) for increasing t walks the unit circle
    // counter-clockwise from (-1,0) (t -> -inf) to (-1,0) (t -> +inf).
    for (std::size_t j = 0; j < k; ++j) {
      const Rational t = make_rational(static_cast<std::int64_t>(4 * j) - 2 * static_cast<std::int64_t>(k - 1),
                                       static_cast<std::int64_t>(k));
      const Rational denom = 1 + t * t;
      vertices.push_back(Point{Rational((1 - t * t) / denom), Rational(2 * t / denom)});
    }
  }
  return solid(2, std::move(vertices));
}

PolytopeComplex pyramid(std::size_t k) {
  const PolytopeComplex base = polygon(k);
  std::vector<Point> vertices;
  for (const auto& v : base.vertices()) vertices.push_back(Point{v[0], v[1], Rational(0)});
  vertices.push_back(Point{make_rational(1, 2), make_rational(1, 2), Rational(1)});
  return solid(3, std::move(vertices));
}

PolytopeComplex product(const PolytopeComplex& a, const PolytopeComplex& b) {
  std::vector<Point> vertices;
  for (const auto& va : a.vertices()) {
    for (const auto& vb : b.vertices()) {
      Point p = va;
      p.insert(p.end(), vb.begin(), vb.end());
      vertices.push_back(std::move(p));
    }
  }
  const std::size_t nb = b.vertices().size();
  std::vector<VertexSet> cells;
  for (auto ca : a.maximal_cells()) {
    for (auto cb : b.maximal_cells()) {
      VertexSet cell;
      for (auto ia : a.cell(ca).vertex_ids)
        for (auto ib : b.cell(cb).vertex_ids) cell.push_back(ia * nb + ib);
      cells.push_back(std::move(cell));
    }
  }
  return build_complex(a.ambient_dim() + b.ambient_dim(), std::move(vertices), cells);
}

PolytopeComplex skeleton(const PolytopeComplex& a, std::size_t k) {
  if (a.empty() || static_cast<int>(k) > a.top_dim()) {
    throw PreconditionError("skeleton dimension " + std::to_string(k) + " exceeds complex dimension " +
                            std::to_string(a.top_dim()));
  }
  std::vector<std::size_t> keep;
  for (const auto& c : a.cells())
    if (c.dim <= k) keep.push_back(c.id);
  return subcomplex(a, keep);
}

PolytopeComplex boundary(const PolytopeComplex& a) {
  if (a.top_dim() < 1) throw PreconditionError("boundary needs a complex of dimension >= 1");
  return skeleton(a, static_cast<std::size_t>(a.top_dim() - 1));
}

PolytopeComplex necklace() { return boundary(polygon(3)); }

PolytopeComplex two_triangles() {
  std::vector<Point> vertices{integer_point({0, 0}), integer_point({1, 0}), integer_point({0, 1}),
                              integer_point({1, 1})};
  return build_complex(2, std::move(vertices), {{0, 1, 2}, {1, 2, 3}});
}

PolytopeComplex generate(std::string_view name, std::size_t param) {
  if (name == "simplex") return simplex(param);
  if (name == "cube") return cube(param);
  if (name == "cross_polytope") return cross_polytope(param);
  if (name == "polygon") return polygon(param);
  if (name == "pyramid") return pyramid(param);
  throw PreconditionError("unknown generator '" + std::string(name) + "'");
}

}  // namespace brokentoric::polytope
