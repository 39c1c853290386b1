#include "brokentoric/cli/document.hpp"

#include <fstream>
#include <limits>
#include <json.hpp>
#include <sstream>

#include "brokentoric/error.hpp"

namespace brokentoric::cli {

using nlohmann::json;

namespace {

json coordinate_to_json(const polytope::Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return static_cast<std::int64_t>(x.get_num().get_si());
  return exactla::to_string(x);
}

polytope::Rational coordinate_from_json(const json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      const auto u = value.get<std::uint64_t>();
      return exactla::parse_rational(std::to_string(u));
    }
    return exactla::make_rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return exactla::parse_rational(value.get<std::string>());
    } catch (const PreconditionError& e) {
      throw InvalidComplex(std::string("bad coordinate: ") + e.what());
    }
  }
  throw InvalidComplex("coordinates must be integers or \"p/q\" strings, got " + value.dump());
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidComplex(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

ComplexDocument parse_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidComplex(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidComplex("complex document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ambient_dim" && key != "vertices" && key != "maximal_cells" && key != "name")
      throw InvalidComplex("unknown field '" + key + "'");
  }

  ComplexDocument out;
  const json& ambient = field(doc, "ambient_dim");
  if (!ambient.is_number_unsigned()) throw InvalidComplex("ambient_dim must be a nonnegative integer");
  out.ambient_dim = ambient.get<std::size_t>();

  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) throw InvalidComplex("vertices must be an array");
  for (const auto& v : vertices) {
    if (!v.is_array() || v.size() != out.ambient_dim)
      throw InvalidComplex("vertex " + std::to_string(out.vertices.size()) + " must have " +
                           std::to_string(out.ambient_dim) + " coordinates");
    polytope::Point point;
    for (const auto& x : v) point.push_back(coordinate_from_json(x));
    out.vertices.push_back(std::move(point));
  }

  const json& cells = field(doc, "maximal_cells");
  if (!cells.is_array()) throw InvalidComplex("maximal_cells must be an array");
  for (const auto& c : cells) {
    if (!c.is_array() || c.empty()) throw InvalidComplex("each maximal cell must be a nonempty array");
    polytope::VertexSet ids;
    for (const auto& x : c) {
      if (!x.is_number_unsigned()) throw InvalidComplex("vertex indices must be nonnegative integers");
      const auto id = x.get<std::size_t>();
      if (id >= out.vertices.size()) throw InvalidComplex("vertex index " + std::to_string(id) + " out of range");
      if (!ids.empty() && id <= ids.back()) throw InvalidComplex("maximal cell indices must be strictly increasing");
      ids.push_back(id);
    }
    out.maximal_cells.push_back(std::move(ids));
  }

  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw InvalidComplex("name must be a string");
    out.name = it->get<std::string>();
  }
  return out;
}

// Keys in sorted order, one vertex or cell per line.
std::string serialize_document(const ComplexDocument& doc) {
  auto spaced = [](const std::string& compact) {
    std::string s;
    for (char c : compact) {
      s += c;
      if (c == ',') s += ' ';
    }
    return s;
  };
  auto rows = [&](const std::vector<json>& items) {
    if (items.empty()) return std::string("[]");
    std::string s = "[\n";
    for (std::size_t k = 0; k < items.size(); ++k) s += "    " + spaced(items[k].dump()) + (k + 1 < items.size() ? ",\n" : "\n");
    return s + "  ]";
  };

  std::vector<json> cells(doc.maximal_cells.begin(), doc.maximal_cells.end());
  std::vector<json> vertices;
  for (const auto& v : doc.vertices) {
    json point = json::array();
    for (const auto& x : v) point.push_back(coordinate_to_json(x));
    vertices.push_back(std::move(point));
  }
  std::string out = "{\n  \"ambient_dim\": " + std::to_string(doc.ambient_dim) + ",\n";
  out += "  \"maximal_cells\": " + rows(cells) + ",\n";
  if (doc.name) out += "  \"name\": " + json(*doc.name).dump() + ",\n";
  out += "  \"vertices\": " + rows(vertices) + "\n}\n";
  return out;
}

ComplexDocument to_document(const polytope::PolytopeComplex& p, std::optional<std::string> name) {
  ComplexDocument doc;
  doc.ambient_dim = p.ambient_dim();
  doc.vertices = p.vertices();
  for (auto id : p.maximal_cells()) doc.maximal_cells.push_back(p.cell(id).vertex_ids);
  doc.name = std::move(name);
  return doc;
}

polytope::PolytopeComplex build(const ComplexDocument& doc) {
  return polytope::build_complex(doc.ambient_dim, doc.vertices, doc.maximal_cells);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidComplex("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace brokentoric::cli
