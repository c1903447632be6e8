#include "curvgraph/graph_json.hpp"

#include "curvgraph/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace curvgraph {

using nlohmann::json;

namespace {

std::optional<int> optional_int(const json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  if (!doc[key].is_number_integer())
    fail(ErrorCode::InvalidInput, std::string("\"") + key + "\" must be an integer or null");
  return doc[key].get<int>();
}

}  // namespace

PlanarGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::InvalidInput, "graph JSON must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    fail(ErrorCode::InvalidInput, "\"vertices\" must be an integer");
  if (!doc.contains("rotation") || !doc["rotation"].is_array())
    fail(ErrorCode::InvalidInput, "\"rotation\" must be an array");

  const auto n = doc["vertices"].get<long long>();
  const json& rot = doc["rotation"];
  if (n < 0 || static_cast<long long>(rot.size()) != n)
    fail(ErrorCode::InvalidInput, "\"rotation\" has " + std::to_string(rot.size()) +
                                      " rows but \"vertices\" is " + std::to_string(n));

  RotationTable table(static_cast<size_t>(n));
  for (size_t v = 0; v < rot.size(); ++v) {
    if (!rot[v].is_array())
      fail(ErrorCode::InvalidInput, "rotation row " + std::to_string(v) + " is not an array");
    for (const auto& w : rot[v]) {
      if (!w.is_number_integer())
        fail(ErrorCode::InvalidInput,
             "rotation row " + std::to_string(v) + " holds a non-integer entry");
      table[v].push_back(w.get<int>());
    }
  }

  GraphOptions options;
  options.center = optional_int(doc, "center");
  options.interior_radius = optional_int(doc, "interior_radius");
  if (doc.contains("outer_face") && !doc["outer_face"].is_null()) {
    const auto model = doc["outer_face"].get<std::string>();
    if (model == "truncated") options.outer_model = OuterFaceModel::Truncated;
    else if (model == "infinigon") options.outer_model = OuterFaceModel::Infinigon;
    else fail(ErrorCode::InvalidInput, "unknown outer_face model \"" + model + "\"");
  }
  if (doc.contains("outer_dart") && !doc["outer_dart"].is_null()) {
    const json& d = doc["outer_dart"];
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
        !d[1].is_number_integer())
      fail(ErrorCode::InvalidInput, "\"outer_dart\" must be a pair of vertices");
    options.outer_dart = std::make_pair(d[0].get<int>(), d[1].get<int>());
  }
  return build_graph(table, options);
}

std::string graph_to_json(const PlanarGraph& g) {
  json doc = json::object();
  doc["vertices"] = g.vertex_count();
  doc["rotation"] = g.rotation_table();
  doc["interior_radius"] = g.interior_radius() ? json(*g.interior_radius()) : json(nullptr);
  doc["center"] = g.center() ? json(*g.center()) : json(nullptr);
  if (g.is_ball()) {
    doc["outer_face"] =
        g.outer_model() == OuterFaceModel::Truncated ? "truncated" : "infinigon";
    json dart = nullptr;
    if (g.outer_face() && g.edge_count() > 0) {
      const auto& walk = g.face(*g.outer_face()).boundary_walk;
      dart = json::array({walk[0], walk.size() > 1 ? walk[1] : walk[0]});
    }
    doc["outer_dart"] = dart;
  } else {
    doc["outer_face"] = nullptr;
    doc["outer_dart"] = nullptr;
  }
  return doc.dump();
}

PlanarGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return graph_from_json(buffer.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

void save_graph(const PlanarGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  out << graph_to_json(g) << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing " + path);
}

}  // namespace curvgraph
