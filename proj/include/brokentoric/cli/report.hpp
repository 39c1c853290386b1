#pragma once

#include <cstddef>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "brokentoric/invariants/invariants.hpp"
#include "brokentoric/sheaves/sheaf.hpp"

namespace brokentoric::cli {

using nlohmann::json;

/// {"kind": ..., "payload": ..., "provenance": {"command": ..., "input_sha256": ...}}
struct ReportDocument {
  std::string kind;
  json payload;
  std::string command;
  std::string input_sha256;

  json to_json() const;
  /// Sorted keys, two-space indent, trailing newline.
  std::string dump() const;
};

std::string sha256_hex(std::string_view data);

/// Right-aligned fixed-width table; every column is as wide as its widest cell.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

json to_json(const invariants::E2Page& e2);
json to_json(const invariants::SignedGrid& grid);
json to_json(const cohomology::BettiVector& b);
json to_json(const invariants::FiltrationTable& table);
json to_json(const invariants::Report& report);

/// Rows q, columns p.
std::string render_e2(const invariants::E2Page& e2);
std::string render_grid(const invariants::SignedGrid& grid);
std::string render_betti(const cohomology::BettiVector& b);
/// Rows H^i, columns L_k annotated with the weights W_{2k} = W_{2k+1} = L_k.
std::string render_filtration(const invariants::FiltrationTable& table);
/// One "[pass] name: detail" line per check.
std::string render_checks(const invariants::Report& report);

/// Labels of the coordinates of ⋀^i Q^m: "1" for i = 0, else "e1^e3" etc.
std::vector<std::string> wedge_labels(std::size_t m, std::size_t i);
/// "0", "<e2>", "<e1-e2>", "<e1, e2>": the reduced basis spelled out.
std::string stalk_label(const exactla::Subspace& stalk, const std::vector<std::string>& coordinate_labels);

json stalks_to_json(const polytope::PolytopeComplex& p, const sheaves::CellSheaf& s,
                    const std::vector<std::string>& coordinate_labels);
std::string render_stalks(const polytope::PolytopeComplex& p, const sheaves::CellSheaf& s,
                          const std::vector<std::string>& coordinate_labels);

}  // namespace brokentoric::cli
