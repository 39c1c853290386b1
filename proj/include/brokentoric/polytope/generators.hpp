#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "brokentoric/polytope/complex.hpp"

namespace brokentoric::polytope {

/// Solid simplex with vertices 0, e1, ..., en.
PolytopeComplex simplex(std::size_t n);
/// Solid cube [0,1]^n; vertices in lexicographic order of their coordinates.
PolytopeComplex cube(std::size_t n);
/// Solid cross-polytope conv(±e_i); vertices e1, -e1, e2, -e2, ...
PolytopeComplex cross_polytope(std::size_t n);
/// Solid convex k-gon with rational vertices (k >= 3). polygon(3) is the
/// right triangle (0,0),(1,0),(0,1), polygon(4) the unit square; larger k
/// use rational points of the unit circle.
PolytopeComplex polygon(std::size_t k);
/// Pyramid over polygon(k) with apex (1/2, 1/2, 1).
PolytopeComplex pyramid(std::size_t k);

/// Cartesian product; maximal cells are products of maximal cells.
PolytopeComplex product(const PolytopeComplex& a, const PolytopeComplex& b);
/// Cells of dimension <= k.
PolytopeComplex skeleton(const PolytopeComplex& a, std::size_t k);
/// skeleton(a, dim - 1).
PolytopeComplex boundary(const PolytopeComplex& a);

/// Necklace of three P^1's: the boundary of the right triangle.
PolytopeComplex necklace();
/// Two triangles glued along the anti-diagonal of the unit square.
PolytopeComplex two_triangles();

/// Dispatch by name for the parameterised generators above
/// ("simplex", "cube", "cross_polytope", "polygon", "pyramid").
/// Throws PreconditionError for unknown names or bad parameters.
PolytopeComplex generate(std::string_view name, std::size_t param);

}  // namespace brokentoric::polytope
