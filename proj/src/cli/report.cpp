#include "brokentoric/cli/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

#include "brokentoric/error.hpp"

namespace brokentoric::cli {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string tuple(const std::vector<std::size_t>& values) {
  std::vector<std::string> parts;
  for (auto v : values) parts.push_back(std::to_string(v));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

json ReportDocument::to_json() const {
  json out;
  out["kind"] = kind;
  out["payload"] = payload;
  out["provenance"] = {{"command", command}, {"input_sha256", input_sha256}};
  return out;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  std::string hex;
  char byte[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(byte, sizeof byte, "%02x", digest[k]);
    hex += byte;
  }
  return hex;
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  measure(header);
  for (const auto& row : rows) measure(row);

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < row.size() ? row[c] : std::string();
      line += (c ? "  " : "") + std::string(width[c] - cell.size(), ' ') + cell;
    }
    out += line + "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

json to_json(const invariants::E2Page& e2) { return {{"n", e2.n}, {"grid", e2.grid}}; }

json to_json(const invariants::SignedGrid& grid) { return grid; }

json to_json(const cohomology::BettiVector& b) {
  return {{"betti", b.dims}, {"euler_characteristic", b.euler_characteristic()}};
}

json to_json(const invariants::FiltrationTable& table) {
  const std::size_t degrees = table.leray.size();
  std::vector<std::vector<std::size_t>> weights(degrees);
  std::vector<std::string> labels;
  for (std::size_t w = 0; w <= 2 * table.n + 1; ++w)
    labels.push_back("W_" + std::to_string(w) + " = L_" + std::to_string(std::min(w / 2, table.n)));
  for (std::size_t i = 0; i < degrees; ++i)
    for (std::size_t w = 0; w <= 2 * table.n + 1; ++w) weights[i].push_back(table.weight(i, w));
  return {{"n", table.n}, {"leray", table.leray}, {"weights", weights}, {"weight_labels", labels}};
}

json to_json(const invariants::Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", c.skipped ? "skip" : (c.passed ? "pass" : "fail")},
                      {"detail", c.detail}});
  }
  return {{"passed", report.passed()}, {"checks", checks}};
}

std::string render_e2(const invariants::E2Page& e2) {
  std::vector<std::string> header{"q\\p"};
  for (std::size_t p = 0; p <= e2.n; ++p) header.push_back(std::to_string(p));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t q = 0; q <= e2.n; ++q) {
    std::vector<std::string> row{std::to_string(q)};
    for (std::size_t p = 0; p <= e2.n; ++p) row.push_back(std::to_string(e2.at(p, q)));
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string render_grid(const invariants::SignedGrid& grid) {
  std::vector<std::string> header{"q\\p"};
  for (std::size_t p = 0; p < grid.size(); ++p) header.push_back(std::to_string(p));
  std::vector<std::vector<std::string>> rows;
  const std::size_t qs = grid.empty() ? 0 : grid.front().size();
  for (std::size_t q = 0; q < qs; ++q) {
    std::vector<std::string> row{std::to_string(q)};
    for (std::size_t p = 0; p < grid.size(); ++p) row.push_back(std::to_string(grid[p][q]));
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string render_betti(const cohomology::BettiVector& b) {
  return "Betti numbers b_0..b_" + std::to_string(b.dims.empty() ? 0 : b.dims.size() - 1) + ": " + tuple(b.dims) +
         "\nEuler characteristic: " + std::to_string(b.euler_characteristic()) + "\n";
}

std::string render_filtration(const invariants::FiltrationTable& table) {
  std::vector<std::string> header{"i"};
  for (std::size_t k = 0; k <= table.n; ++k) {
    std::string label = "L_" + std::to_string(k) + " (W_" + std::to_string(2 * k) + "=W_" + std::to_string(2 * k + 1);
    header.push_back(label + ")");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < table.leray.size(); ++i) {
    std::vector<std::string> row{"H^" + std::to_string(i)};
    for (auto d : table.leray[i]) row.push_back(std::to_string(d));
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string render_checks(const invariants::Report& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.skipped ? "[skip] " : (c.passed ? "[pass] " : "[FAIL] ");
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

std::vector<std::string> wedge_labels(std::size_t m, std::size_t i) {
  if (i == 0) return {"1"};
  std::vector<std::string> labels;
  for (const auto& subset : exactla::lex_subsets(m, i)) {
    std::vector<std::string> parts;
    for (auto k : subset) parts.push_back("e" + std::to_string(k + 1));
    labels.push_back(join(parts, "^"));
  }
  return labels;
}

std::string stalk_label(const exactla::Subspace& stalk, const std::vector<std::string>& coordinate_labels) {
  if (stalk.dim() == 0) return "0";
  std::vector<std::string> vectors;
  for (std::size_t r = 0; r < stalk.dim(); ++r) {
    std::string v;
    for (std::size_t c = 0; c < stalk.ambient_dim(); ++c) {
      const auto& x = stalk.basis()(r, c);
      if (x == 0) continue;
      const bool negative = exactla::sign(x) < 0;
      if (!v.empty()) v += negative ? "-" : "+";
      else if (negative) v += "-";
      const exactla::Rational magnitude = abs(x);
      if (magnitude != 1) v += exactla::to_string(magnitude) + "*";
      v += coordinate_labels.at(c);
    }
    vectors.push_back(v);
  }
  return "<" + join(vectors, ", ") + ">";
}

json stalks_to_json(const polytope::PolytopeComplex& p, const sheaves::CellSheaf& s,
                    const std::vector<std::string>& coordinate_labels) {
  s.require_on(p);
  json cells = json::array();
  for (const auto& cell : p.cells()) {
    const auto& stalk = s.stalk(cell.id);
    json basis = json::array();
    for (std::size_t r = 0; r < stalk.dim(); ++r) {
      json row = json::array();
      for (const auto& x : stalk.basis().row(r)) row.push_back(exactla::to_string(x));
      basis.push_back(std::move(row));
    }
    cells.push_back({{"id", cell.id},
                     {"dim", cell.dim},
                     {"vertices", cell.vertex_ids},
                     {"stalk_dim", stalk.dim()},
                     {"basis", basis},
                     {"label", stalk_label(stalk, coordinate_labels)}});
  }
  return {{"coeff_dim", s.coeff_dim()}, {"coordinates", coordinate_labels}, {"cells", cells}};
}

std::string render_stalks(const polytope::PolytopeComplex& p, const sheaves::CellSheaf& s,
                          const std::vector<std::string>& coordinate_labels) {
  s.require_on(p);
  std::vector<std::vector<std::string>> rows;
  for (const auto& cell : p.cells()) {
    std::vector<std::string> ids;
    for (auto v : cell.vertex_ids) ids.push_back(std::to_string(v));
    rows.push_back({std::to_string(cell.id), std::to_string(cell.dim), "{" + join(ids, ",") + "}",
                    std::to_string(s.stalk(cell.id).dim()), stalk_label(s.stalk(cell.id), coordinate_labels)});
  }
  return render_table({"cell", "dim", "vertices", "rank", "stalk"}, rows);
}

}  // namespace brokentoric::cli
