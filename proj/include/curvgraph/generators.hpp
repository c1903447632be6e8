#pragma once

#include "curvgraph/planar_graph.hpp"

#include <cstdint>

namespace curvgraph {

/// Vertex cap for generated graphs: CURVGRAPH_BUDGET if set, else 1'000'000.
std::int64_t generation_budget();

/// Ball of radius R around a vertex of G_{p,q}, centered at vertex 0, with
/// interior radius R. Vertices are numbered in breadth-first discovery order.
/// q = kInfinite yields the tree T_p. The sphere sizes are certified against
/// the growth series before returning.
/// Errors: ParameterOutOfRange, ResourceLimit, GenerationFailed.
PlanarGraph regular_tessellation_ball(int p, int q, int R);
PlanarGraph regular_tessellation_ball(int p, int q, int R, std::int64_t budget);

/// Depth-R ball of the p-regular tree; all faces are infinigons.
/// Errors: ParameterOutOfRange, ResourceLimit.
PlanarGraph regular_tree_ball(int p, int R);
PlanarGraph regular_tree_ball(int p, int R, std::int64_t budget);

/// Number of vertices of the radius-R ball of G_{p,q} (or T_p), from the
/// growth series; saturates at INT64_MAX.
std::int64_t predicted_ball_size(int p, int q, int R);

}  // namespace curvgraph
