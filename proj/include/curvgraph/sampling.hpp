#pragma once

#include "curvgraph/planar_graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace curvgraph {

/// Random connected subset of `allowed` vertices: a random seed grown by
/// repeatedly adding a uniformly chosen allowed neighbour, up to `size`
/// vertices (fewer if the component is smaller). Sorted.
std::vector<int> random_connected_subset(const PlanarGraph& g, const std::vector<int>& allowed,
                                         int size, std::mt19937_64& rng);

}  // namespace curvgraph
