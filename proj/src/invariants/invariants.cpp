#include "brokentoric/invariants/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "brokentoric/error.hpp"
#include "brokentoric/sheaves/sheaf.hpp"

namespace brokentoric::invariants {

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return static_cast<std::int64_t>(exactla::binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
}

std::int64_t parity_sign(std::int64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::string cell_pair(std::size_t p, std::size_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

std::size_t FiltrationTable::weight(std::size_t i, std::size_t w) const {
  return leray.at(i).at(std::min(w / 2, n));
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.skipped; });
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, false, std::move(detail)});
}

void Report::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), true, true, std::move(reason)});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::size_t thread_budget() {
  if (const char* env = std::getenv("BROKENTORIC_THREADS")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (auto [ptr, ec] = std::from_chars(env, end, value); ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

E2Page e2_page(const PolytopeComplex& p, Engine engine) {
  E2Page e2;
  if (p.empty()) return e2;
  e2.n = static_cast<std::size_t>(p.top_dim());
  e2.grid.assign(e2.n + 1, std::vector<std::size_t>(e2.n + 1, 0));

  std::vector<BettiVector> columns(e2.n + 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t q = next++; q <= e2.n; q = next++) {
      try {
        columns[q] = cohomology::sheaf_cohomology(p, sheaves::moment_sheaf(p, q), engine);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(thread_budget(), e2.n + 1);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t q = 0; q <= e2.n; ++q)
    for (std::size_t pdeg = 0; pdeg <= e2.n; ++pdeg) e2.grid[pdeg][q] = columns[q].dims.at(pdeg);
  return e2;
}

BettiVector betti_broken_toric(const E2Page& e2) {
  BettiVector b;
  if (e2.grid.empty()) return b;
  b.dims.assign(2 * e2.n + 1, 0);
  for (std::size_t p = 0; p <= e2.n; ++p)
    for (std::size_t q = 0; q <= e2.n; ++q) b.dims[p + q] += e2.grid[p][q];
  return b;
}

BettiVector betti_broken_toric(const PolytopeComplex& p, Engine engine) { return betti_broken_toric(e2_page(p, engine)); }

FiltrationTable leray_weight_table(const E2Page& e2) {
  FiltrationTable table;
  table.n = e2.n;
  if (e2.grid.empty()) return table;
  table.leray.assign(2 * e2.n + 1, std::vector<std::size_t>(e2.n + 1, 0));
  for (std::size_t i = 0; i <= 2 * e2.n; ++i) {
    for (std::size_t k = 0; k <= e2.n; ++k) {
      for (std::size_t q = 0; q <= std::min(k, i); ++q) {
        const std::size_t p = i - q;
        if (p <= e2.n) table.leray[i][k] += e2.grid[p][q];
      }
    }
  }
  return table;
}

std::vector<std::int64_t> h_vector_formula(const PolytopeComplex& p) {
  if (!polytope::is_simple(p)) throw PreconditionError("the toric h-vector formula needs a simple polytope");
  const auto f = p.f_vector();
  const auto n = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (std::int64_t i = 0; i <= n; ++i)
    for (std::int64_t j = i; j <= n; ++j) h[i] += parity_sign(i - j) * choose(j, i) * static_cast<std::int64_t>(f[j]);
  return h;
}

Report verify_vanishing(const PolytopeComplex& p, const E2Page& e2, VanishingMode mode) {
  Report report;
  std::vector<std::string> bad;
  for (std::size_t pd = 0; pd <= e2.n && !e2.grid.empty(); ++pd)
    for (std::size_t q = pd + 1; q <= e2.n; ++q)
      if (e2.grid[pd][q] != 0) bad.push_back(cell_pair(pd, q) + "=" + std::to_string(e2.grid[pd][q]));
  std::string detail;
  for (const auto& b : bad) detail += (detail.empty() ? "nonzero " : ", ") + b;
  report.add("lower vanishing h^p(R^q) = 0 for p < q", bad.empty(), detail);
  if (mode == VanishingMode::lower) return report;

  polytope::single_top_cell(p);
  if (!polytope::is_simple(p)) {
    report.skip("toric diagonal (p > q vanishing, h-vector)", "polytope is not simple");
    return report;
  }
  bad.clear();
  for (std::size_t pd = 0; pd <= e2.n; ++pd)
    for (std::size_t q = 0; q < pd; ++q)
      if (e2.grid[pd][q] != 0) bad.push_back(cell_pair(pd, q) + "=" + std::to_string(e2.grid[pd][q]));
  detail.clear();
  for (const auto& b : bad) detail += (detail.empty() ? "nonzero " : ", ") + b;
  report.add("upper vanishing h^p(R^q) = 0 for p > q", bad.empty(), detail);

  const auto h = h_vector_formula(p);
  bool diagonal_ok = true;
  detail = "diagonal (";
  for (std::size_t i = 0; i <= e2.n; ++i) {
    diagonal_ok = diagonal_ok && static_cast<std::int64_t>(e2.grid[i][i]) == h[i];
    detail += (i ? "," : "") + std::to_string(e2.grid[i][i]);
  }
  detail += ") vs h-vector (";
  for (std::size_t i = 0; i < h.size(); ++i) detail += (i ? "," : "") + std::to_string(h[i]);
  report.add("diagonal equals toric h-vector", diagonal_ok, detail + ")");
  return report;
}

SkeletalPrediction skeletal_formula(const PolytopeComplex& parent, std::size_t n, Engine engine) {
  const auto& top = parent.cell(polytope::single_top_cell(parent));
  if (n >= top.dim) {
    throw PreconditionError("skeleton dimension " + std::to_string(n) + " must be below the polytope dimension " +
                            std::to_string(top.dim));
  }
  SkeletalPrediction out;
  out.n = n;
  out.parent_dim = top.dim;
  const auto nn = static_cast<std::int64_t>(n);
  const auto np = static_cast<std::int64_t>(top.dim);
  const auto f = parent.f_vector();

  // Σ_{l=n+1}^{n'} (-1)^{n+l+1} C(l,i) f_l
  auto tail = [&](std::int64_t i) {
    std::int64_t s = 0;
    for (std::int64_t l = nn + 1; l <= np; ++l) s += parity_sign(nn + l + 1) * choose(l, i) * static_cast<std::int64_t>(f[l]);
    return s;
  };

  const E2Page solid = e2_page(parent, engine);
  out.general.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::int64_t i = 0; i <= nn; ++i) {
    for (std::int64_t j = i; j <= nn; ++j) {
      std::int64_t value = 0;
      if (j < nn) {
        value = static_cast<std::int64_t>(solid.at(j, i));
      } else {
        for (std::int64_t l = nn; l <= np; ++l) value += parity_sign(nn + l) * static_cast<std::int64_t>(solid.at(l, i));
        value += tail(i);
      }
      out.general[j][i] = value;
    }
  }

  if (polytope::is_simple(parent)) {
    const auto h = h_vector_formula(parent);
    SignedGrid grid(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (std::int64_t i = 0; i <= nn; ++i) {
      if (i < nn) grid[i][i] = h[i];
      grid[n][i] = tail(i) + (i == nn ? h[n] : 0);
    }
    out.simple = std::move(grid);
  }
  return out;
}

ClosedFormBetti skeletal_closed_form(const PolytopeComplex& parent) {
  if (!polytope::is_simple(parent)) throw PreconditionError("the closed-form skeletal Betti numbers need a simple polytope");
  const auto& top = parent.cell(polytope::single_top_cell(parent));
  if (top.dim < 1) throw PreconditionError("the closed-form skeletal Betti numbers need a polytope of dimension >= 1");
  const auto f = parent.f_vector();
  const auto n = static_cast<std::int64_t>(top.dim) - 1;

  auto evaluate = [&](bool corrected) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(2 * n + 1), 0);
    auto toric_part = [&](std::int64_t i) {
      const std::int64_t exponent = corrected ? n + 1 - i : n + 1 - 2 * i;
      std::int64_t s = parity_sign(exponent) * choose(n + 1, i);
      for (std::int64_t k = i; k <= n; ++k) s += parity_sign(i - k) * choose(k, i) * static_cast<std::int64_t>(f[k]);
      return s;
    };
    for (std::int64_t j = 0; j <= 2 * n; ++j) {
      const std::int64_t i = j / 2;
      std::int64_t value = 0;
      if (j < n) {
        value = j % 2 == 0 ? toric_part(i) : 0;
      } else if (j % 2 == 1) {
        value = choose(n + 1, j - n);
      } else {
        value = choose(n + 1, j - n) + toric_part(i);
      }
      b[j] = value;
    }
    return b;
  };

  ClosedFormBetti out;
  out.n = static_cast<std::size_t>(n);
  out.corrected = evaluate(true);
  out.printed = evaluate(false);
  return out;
}

Report euler_check(const PolytopeComplex& p, const E2Page& e2) {
  Report report;
  const long chi = betti_broken_toric(e2).euler_characteristic();
  const long vertices = static_cast<long>(p.cells_of_dim(0).size());
  report.add("Euler characteristic equals vertex count", chi == vertices,
             "chi = " + std::to_string(chi) + ", vertices = " + std::to_string(vertices));
  return report;
}

Report mayer_vietoris_check(const PolytopeComplex& p, Engine engine) {
  const auto pieces = polytope::singular_decomposition(p);
  const std::size_t n = static_cast<std::size_t>(p.top_dim());
  auto chi = [&](const PolytopeComplex& c, std::size_t i) {
    return cohomology::sheaf_cohomology(c, sheaves::moment_sheaf(c, i), engine).euler_characteristic();
  };
  auto chi_sum = [&](const std::vector<PolytopeComplex>& parts, std::size_t i) {
    long s = 0;
    for (const auto& c : parts) s += chi(c, i);
    return s;
  };

  Report report;
  for (std::size_t i = 0; i <= n; ++i) {
    const long x = chi(p, i);
    const long y = chi(pieces.Y_complex, i);
    const long xt = chi_sum(pieces.Xtilde, i);
    const long yf = chi_sum(pieces.Yfibre, i);
    const long yn = chi_sum(pieces.Ytilde, i);
    const long defect = x - y - xt + yf;
    report.add("Mayer-Vietoris chi identity, sheaf degree " + std::to_string(i), defect == 0,
               "chi(X) - chi(Y) - chi(X~) + chi(X~ x_X Y) = " + std::to_string(x) + " - " + std::to_string(y) +
                   " - " + std::to_string(xt) + " + " + std::to_string(yf) + " = " + std::to_string(defect) +
                   " (with the normalization of Y in place of the fibre product: " +
                   std::to_string(x - y - xt + yn) + ")");
  }
  return report;
}

}  // namespace brokentoric::invariants
