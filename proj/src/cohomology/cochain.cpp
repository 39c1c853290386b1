#include "brokentoric/cohomology/cochain.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "brokentoric/error.hpp"

namespace brokentoric::cohomology {

using exactla::RationalMatrix;

namespace {

void require_compatible(const PolytopeComplex& p, const CellSheaf& s) {
  s.require_on(p);
  const auto report = sheaves::check_cell_compatibility(p, s);
  if (!report.passed) {
    const auto [a, b] = report.violations.front();
    throw PreconditionError("sheaf is not cell-compatible: stalk of cell " + std::to_string(a) +
                            " is not contained in the stalk of cell " + std::to_string(b));
  }
}

// Inclusion matrices stalk(α) ↪ stalk(β), memoized per pair.
class Inclusions {
 public:
  explicit Inclusions(const CellSheaf& s) : sheaf_(s) {}

  const RationalMatrix& get(std::size_t alpha, std::size_t beta) {
    auto key = std::make_pair(alpha, beta);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, exactla::inclusion_matrix(sheaf_.stalk(alpha), sheaf_.stalk(beta))).first;
    return it->second;
  }

 private:
  const CellSheaf& sheaf_;
  std::map<std::pair<std::size_t, std::size_t>, RationalMatrix> cache_;
};

}  // namespace

void CochainComplex::validate() const {
  if (!terms.empty() && differentials.size() + 1 != terms.size())
    throw InternalError("cochain complex has " + std::to_string(differentials.size()) + " differentials for " +
                        std::to_string(terms.size()) + " terms");
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    if (differentials[k].cols() != terms[k] || differentials[k].rows() != terms[k + 1])
      throw InternalError("differential d^" + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    if (!(differentials[k + 1] * differentials[k]).is_zero())
      throw InternalError("d^" + std::to_string(k + 1) + " ∘ d^" + std::to_string(k) + " ≠ 0");
  }
}

long CochainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(terms[k]);
  return chi;
}

long BettiVector::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(dims[k]);
  return chi;
}

Engine parse_engine(std::string_view name) {
  if (name == "cellular") return Engine::cellular;
  if (name == "bar") return Engine::bar;
  if (name == "both") return Engine::both;
  throw PreconditionError("unknown engine '" + std::string(name) + "'");
}

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::cellular:
      return "cellular";
    case Engine::bar:
      return "bar";
    case Engine::both:
      return "both";
  }
  return "both";
}

CochainComplex cellular_complex(const PolytopeComplex& p, const CellSheaf& s) {
  require_compatible(p, s);
  CochainComplex c;
  if (p.empty()) return c;
  const std::size_t top = static_cast<std::size_t>(p.top_dim());

  std::vector<std::size_t> offset(p.cell_count());
  c.terms.assign(top + 1, 0);
  c.basis_labels.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    for (auto id : p.cells_of_dim(k)) {
      offset[id] = c.terms[k];
      for (std::size_t b = 0; b < s.stalk(id).dim(); ++b) c.basis_labels[k].push_back({{id}, b});
      c.terms[k] += s.stalk(id).dim();
    }
  }

  Inclusions inclusions(s);
  for (std::size_t k = 0; k < top; ++k) {
    SparseMatrix d(c.terms[k + 1], c.terms[k]);
    for (auto beta : p.cells_of_dim(k + 1)) {
      for (const auto& [alpha, sign] : p.boundary(beta)) {
        d.add_block(offset[beta], offset[alpha], inclusions.get(alpha, beta), sign);
      }
    }
    c.differentials.push_back(std::move(d));
  }
  c.validate();
  return c;
}

CochainComplex bar_complex(const PolytopeComplex& p, const CellSheaf& s) {
  require_compatible(p, s);
  CochainComplex c;
  if (p.empty()) return c;
  const std::size_t top = static_cast<std::size_t>(p.top_dim());

  // Strictly larger cells of each cell in the face order.
  std::vector<std::vector<std::size_t>> above(p.cell_count());
  for (const auto& beta : p.cells())
    for (auto alpha : p.faces(beta.id))
      if (alpha != beta.id) above[alpha].push_back(beta.id);

  // chains[k]: all chains of k+1 cells, in lexicographic order.
  std::vector<std::vector<std::vector<std::size_t>>> chains(top + 1);
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self) -> void {
    chains[current.size() - 1].push_back(current);
    for (auto next : above[current.back()]) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  for (const auto& cell : p.cells()) {
    current = {cell.id};
    extend(extend);
  }

  std::vector<std::map<std::vector<std::size_t>, std::size_t>> offset(top + 1);
  c.terms.assign(top + 1, 0);
  c.basis_labels.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    std::sort(chains[k].begin(), chains[k].end());
    for (const auto& chain : chains[k]) {
      offset[k][chain] = c.terms[k];
      const std::size_t dim = s.stalk(chain.back()).dim();
      for (std::size_t b = 0; b < dim; ++b) c.basis_labels[k].push_back({chain, b});
      c.terms[k] += dim;
    }
  }

  Inclusions inclusions(s);
  for (std::size_t k = 0; k < top; ++k) {
    SparseMatrix d(c.terms[k + 1], c.terms[k]);
    for (const auto& chain : chains[k + 1]) {
      const std::size_t row = offset[k + 1].at(chain);
      const std::size_t dim = s.stalk(chain.back()).dim();
      if (dim == 0) continue;
      std::vector<std::size_t> face;
      for (std::size_t t = 0; t <= k; ++t) {
        face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
        const std::size_t col = offset[k].at(face);
        const int sign = t % 2 ? -1 : 1;
        for (std::size_t b = 0; b < dim; ++b) d.add(row + b, col + b, sign);
      }
      face.assign(chain.begin(), chain.end() - 1);
      const int sign = (k + 1) % 2 ? -1 : 1;
      d.add_block(row, offset[k].at(face), inclusions.get(chain[k], chain[k + 1]), sign);
    }
    c.differentials.push_back(std::move(d));
  }
  c.validate();
  return c;
}

BettiVector betti(const CochainComplex& c) {
  std::vector<std::size_t> ranks;
  ranks.reserve(c.differentials.size());
  for (const auto& d : c.differentials) ranks.push_back(exactla::rank(d));
  BettiVector h;
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    const std::size_t out = k < ranks.size() ? ranks[k] : 0;
    const std::size_t in = k > 0 ? ranks[k - 1] : 0;
    h.dims.push_back(c.terms[k] - out - in);
  }
  return h;
}

BettiVector sheaf_cohomology(const PolytopeComplex& p, const CellSheaf& s, Engine engine) {
  if (engine == Engine::cellular) return betti(cellular_complex(p, s));
  if (engine == Engine::bar) return betti(bar_complex(p, s));
  const BettiVector cellular = betti(cellular_complex(p, s));
  const BettiVector bar = betti(bar_complex(p, s));
  if (!(cellular == bar)) {
    auto show = [](const BettiVector& b) {
      std::string out = "(";
      for (std::size_t k = 0; k < b.dims.size(); ++k) out += (k ? "," : "") + std::to_string(b.dims[k]);
      return out + ")";
    };
    throw InternalError("cohomology engines disagree: cellular " + show(cellular) + " vs bar " + show(bar));
  }
  return cellular;
}

}  // namespace brokentoric::cohomology
