#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brokentoric/cohomology/cochain.hpp"
#include "brokentoric/polytope/complex.hpp"

namespace brokentoric::invariants {

using cohomology::BettiVector;
using cohomology::Engine;
using polytope::PolytopeComplex;

/// grid[p][q] = h^p(P, R^q f_* Q), 0 <= p, q <= n.
struct E2Page {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> grid;

  std::size_t at(std::size_t p, std::size_t q) const { return grid.at(p).at(q); }
  friend bool operator==(const E2Page&, const E2Page&) = default;
};

/// A predicted grid; entries are signed so a wrong formula shows up as a
/// negative value instead of wrapping.
using SignedGrid = std::vector<std::vector<std::int64_t>>;

/// Leray filtration dimensions per cohomological degree.
struct FiltrationTable {
  std::size_t n = 0;
  /// leray[i][k] = dim L_k H^i, 0 <= i <= 2n, 0 <= k <= n.
  std::vector<std::vector<std::size_t>> leray;

  /// dim W_w H^i via W_{2k} = W_{2k+1} = L_k (k clamped to n).
  std::size_t weight(std::size_t i, std::size_t w) const;
};

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string reason);
  void append(const Report& other);
};

/// Runs degrees q = 0..n in parallel, capped by BROKENTORIC_THREADS.
E2Page e2_page(const PolytopeComplex& p, Engine engine = Engine::both);

/// b_k = Σ_{p+q=k} grid[p][q], k = 0..2n.
BettiVector betti_broken_toric(const E2Page& e2);
BettiVector betti_broken_toric(const PolytopeComplex& p, Engine engine = Engine::both);

/// dim L_k H^i = Σ_{p+q=i, q<=k} grid[p][q].
FiltrationTable leray_weight_table(const E2Page& e2);

/// Toric h-numbers h_i = Σ_{j>=i} (-1)^{i-j} C(j,i) f_j of a simple polytope
/// (f counts the solid polytope, top cell included).
std::vector<std::int64_t> h_vector_formula(const PolytopeComplex& p);

enum class VanishingMode { lower, toric_diagonal };

/// lower: grid[p][q] = 0 for p < q. toric_diagonal additionally requires a
/// simple single polytope and checks grid[p][q] = 0 for p > q and
/// grid[i][i] = h_i.
Report verify_vanishing(const PolytopeComplex& p, const E2Page& e2, VanishingMode mode);

struct SkeletalPrediction {
  std::size_t n = 0;            ///< skeleton dimension
  std::size_t parent_dim = 0;   ///< n'
  SignedGrid general;           ///< from engine cohomology of the solid parent
  std::optional<SignedGrid> simple;  ///< from h_vector_formula, when the parent is simple
};

/// Predicted E2 grid of skeleton(parent, n) from data of the solid parent.
/// Throws PreconditionError unless parent is a single polytope with n < dim.
SkeletalPrediction skeletal_formula(const PolytopeComplex& parent, std::size_t n, Engine engine = Engine::both);

struct ClosedFormBetti {
  std::size_t n = 0;
  /// Middle sign exponent n+1-i (the composition of the skeletal table with
  /// the toric h-numbers).
  std::vector<std::int64_t> corrected;
  /// Same display with the exponent n+1-2i.
  std::vector<std::int64_t> printed;
};

/// Betti numbers of the broken toric variety over the boundary complex of a
/// simple (n+1)-polytope. Throws PreconditionError for non-simple input.
ClosedFormBetti skeletal_closed_form(const PolytopeComplex& parent);

/// Σ (-1)^k b_k = number of vertices.
Report euler_check(const PolytopeComplex& p, const E2Page& e2);

/// Per sheaf degree i: χ_i(X) - χ_i(Y) - χ_i(X̃) + χ_i(X̃ ×_X Y) = 0 with
/// χ_i the Euler characteristic of the moment sheaf of degree i.
Report mayer_vietoris_check(const PolytopeComplex& p, Engine engine = Engine::both);

/// Threads used by e2_page (BROKENTORIC_THREADS, default hardware concurrency).
std::size_t thread_budget();

}  // namespace brokentoric::invariants
