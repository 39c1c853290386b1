#include "brokentoric/sheaves/sheaf.hpp"

#include <algorithm>
#include <set>

#include "brokentoric/error.hpp"

namespace brokentoric::sheaves {

using exactla::binomial;
using exactla::exterior_power;

CellSheaf::CellSheaf(std::size_t coeff_dim, std::vector<Subspace> stalks)
    : coeff_dim_(coeff_dim), stalks_(std::move(stalks)) {
  for (const auto& s : stalks_) {
    if (s.ambient_dim() != coeff_dim_) throw PreconditionError("stalk outside the coefficient space");
  }
}

void CellSheaf::require_on(const PolytopeComplex& p) const {
  if (stalks_.size() != p.cell_count()) {
    throw PreconditionError("sheaf has " + std::to_string(stalks_.size()) + " stalks but the complex has " +
                            std::to_string(p.cell_count()) + " cells");
  }
}

CellSheaf constant_sheaf(const PolytopeComplex& p, std::size_t m) {
  return CellSheaf(m, std::vector<Subspace>(p.cell_count(), Subspace::full(m)));
}

CellSheaf moment_sheaf(const PolytopeComplex& p, std::size_t i) {
  std::vector<Subspace> stalks;
  stalks.reserve(p.cell_count());
  for (const auto& c : p.cells()) stalks.push_back(exterior_power(c.direction_space, i));
  return CellSheaf(binomial(p.ambient_dim(), i), std::move(stalks));
}

std::vector<std::size_t> facets_of_polytope(const PolytopeComplex& p) {
  return p.cell(polytope::single_top_cell(p)).facet_ids;
}

CellSheaf structural_sheaf(const PolytopeComplex& p, std::size_t i, std::span<const std::size_t> facets) {
  const auto& top = p.cell(polytope::single_top_cell(p));
  for (auto a : facets) {
    if (!std::binary_search(top.facet_ids.begin(), top.facet_ids.end(), a))
      throw PreconditionError("cell " + std::to_string(a) + " is not a facet of the polytope");
  }
  std::vector<Subspace> stalks;
  stalks.reserve(p.cell_count());
  for (const auto& gamma : p.cells()) {
    Subspace h = top.direction_space;
    for (auto a : facets)
      if (p.is_face(gamma.id, a)) h = intersect(h, p.cell(a).direction_space);
    stalks.push_back(exterior_power(h, i));
  }
  return CellSheaf(binomial(p.ambient_dim(), i), std::move(stalks));
}

CompatibilityReport check_cell_compatibility(const PolytopeComplex& p, const CellSheaf& s) {
  s.require_on(p);
  CompatibilityReport report;
  for (const auto& beta : p.cells()) {
    for (auto alpha : beta.facet_ids) {
      if (!contains(s.stalk(beta.id), s.stalk(alpha))) report.violations.emplace_back(alpha, beta.id);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.passed = report.violations.empty();
  return report;
}

CellSheaf restrict_sheaf(const PolytopeComplex& p, const CellSheaf& s, const PolytopeComplex& sub) {
  s.require_on(p);
  std::vector<Subspace> stalks;
  stalks.reserve(sub.cell_count());
  for (const auto& c : sub.cells()) {
    const auto id = p.find(c.vertex_ids);
    if (!id) throw PreconditionError("restriction target is not a subcomplex: missing cell " + std::to_string(c.id));
    stalks.push_back(s.stalk(*id));
  }
  return CellSheaf(s.coeff_dim(), std::move(stalks));
}

PeelReport peel_sequence(const PolytopeComplex& p, std::size_t i, std::span<const std::size_t> ordering) {
  if (!polytope::is_simple(p)) {
    throw PreconditionError(
        "facet peeling needs a simple polytope: at a vertex where more than n facets meet the stalk "
        "dimensions of the peeling sequence do not add up");
  }
  const auto& top = p.cell(polytope::single_top_cell(p));
  const std::size_t n = top.dim;
  std::set<std::size_t> seen;
  for (auto a : ordering) {
    if (!std::binary_search(top.facet_ids.begin(), top.facet_ids.end(), a))
      throw PreconditionError("cell " + std::to_string(a) + " is not a facet of the polytope");
    if (!seen.insert(a).second) throw PreconditionError("facet " + std::to_string(a) + " repeated in the ordering");
  }

  PeelReport report;
  for (std::size_t m = 1; m <= ordering.size(); ++m) {
    PeelStep step;
    step.index = m;
    step.facet = ordering[m - 1];
    step.sheaf_before = structural_sheaf(p, i, ordering.first(m - 1));
    step.sheaf_after = structural_sheaf(p, i, ordering.first(m));
    step.facet_complex = polytope::closure(p, step.facet);

    const auto& facet_vertices = p.cell(step.facet).vertex_ids;
    std::vector<std::size_t> ridges;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const auto& other = p.cell(ordering[j]).vertex_ids;
      polytope::VertexSet meet;
      std::set_intersection(facet_vertices.begin(), facet_vertices.end(), other.begin(), other.end(),
                            std::back_inserter(meet));
      const auto id = meet.empty() ? std::nullopt : p.find(meet);
      if (id && n >= 2 && p.cell(*id).dim == n - 2) ridges.push_back(*step.facet_complex.find(meet));
    }
    step.quotient_sheaf =
        i == 0 ? CellSheaf(0, std::vector<Subspace>(step.facet_complex.cell_count(), Subspace::zero(0)))
               : structural_sheaf(step.facet_complex, i - 1, ridges);

    for (const auto& gamma : p.cells()) {
      const Subspace& before = step.sheaf_before.stalk(gamma.id);
      const Subspace& after = step.sheaf_after.stalk(gamma.id);
      const std::string where = "step " + std::to_string(m) + ", cell " + std::to_string(gamma.id);
      if (p.is_face(gamma.id, step.facet)) {
        const Subspace& quotient = step.quotient_sheaf.stalk(*step.facet_complex.find(gamma.vertex_ids));
        if (!contains(before, after)) step.failures.push_back(where + ": kernel stalk not contained in source stalk");
        if (before.dim() != after.dim() + quotient.dim()) {
          step.failures.push_back(where + ": dim " + std::to_string(before.dim()) + " != " +
                                  std::to_string(after.dim()) + " + " + std::to_string(quotient.dim()));
        }
      } else if (before != after) {
        step.failures.push_back(where + ": stalk changed away from the peeled facet");
      }
    }
    step.exact = step.failures.empty();
    report.exact = report.exact && step.exact;
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace brokentoric::sheaves
