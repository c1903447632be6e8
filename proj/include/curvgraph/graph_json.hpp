#pragma once

#include "curvgraph/planar_graph.hpp"

#include <string>

namespace curvgraph {

// Graph documents look like
//   {"vertices": N, "rotation": [[...], ...], "interior_radius": r|null,
//    "center": v0|null}
// with two optional keys that pin down a ball's outer face exactly:
//   "outer_face": "truncated"|"infinigon", "outer_dart": [u, v].
// Writing always emits all six keys so a read-back reproduces the graph.

/// Errors: InvalidInput for malformed documents, plus every build_graph error.
PlanarGraph graph_from_json(const std::string& text);
std::string graph_to_json(const PlanarGraph& g);

PlanarGraph load_graph(const std::string& path);
void save_graph(const PlanarGraph& g, const std::string& path);

}  // namespace curvgraph
