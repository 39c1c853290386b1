#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brokentoric/polytope/complex.hpp"

namespace brokentoric::cli {

/// Interchange form of a polytope complex:
///
///   {"ambient_dim": 2,
///    "maximal_cells": [[0, 1], [0, 2], [1, 2]],
///    "name": "necklace",
///    "vertices": [[0, 0], [1, 0], [0, 1]]}
///
/// Coordinates are JSON integers or "p/q" strings (integers that do not fit
/// in 64 bits are also written as strings). Keys are emitted sorted.
struct ComplexDocument {
  std::size_t ambient_dim = 0;
  std::vector<polytope::Point> vertices;
  std::vector<polytope::VertexSet> maximal_cells;
  std::optional<std::string> name;

  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Throws InvalidComplex on malformed JSON, missing fields, non-exact
/// coordinates or out-of-range vertex indices.
ComplexDocument parse_document(std::string_view json_text);
std::string serialize_document(const ComplexDocument& doc);

ComplexDocument to_document(const polytope::PolytopeComplex& p, std::optional<std::string> name = std::nullopt);
polytope::PolytopeComplex build(const ComplexDocument& doc);

/// Reads a whole file; throws InvalidComplex if it cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace brokentoric::cli
