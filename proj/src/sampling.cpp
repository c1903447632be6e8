#include "curvgraph/sampling.hpp"

#include "curvgraph/error.hpp"

#include <algorithm>

namespace curvgraph {

std::vector<int> random_connected_subset(const PlanarGraph& g, const std::vector<int>& allowed,
                                         int size, std::mt19937_64& rng) {
  if (allowed.empty()) fail(ErrorCode::EmptySet, "no vertices to sample from");
  if (size < 1) fail(ErrorCode::InvalidInput, "subset size must be positive");
  std::vector<char> ok(g.vertex_count(), 0), taken(g.vertex_count(), 0);
  for (int v : allowed) ok[v] = 1;

  std::vector<int> members{allowed[std::uniform_int_distribution<size_t>(0, allowed.size() - 1)(rng)]};
  taken[members[0]] = 1;
  std::vector<int> frontier;
  auto push_neighbours = [&](int v) {
    for (int u : g.rotation(v))
      if (ok[u] && !taken[u]) frontier.push_back(u);
  };
  push_neighbours(members[0]);
  while (static_cast<int>(members.size()) < size) {
    // Drop stale entries lazily; duplicates bias towards well-connected vertices.
    frontier.erase(std::remove_if(frontier.begin(), frontier.end(),
                                  [&](int u) { return taken[u] != 0; }),
                   frontier.end());
    if (frontier.empty()) break;
    const int w = frontier[std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng)];
    taken[w] = 1;
    members.push_back(w);
    push_neighbours(w);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace curvgraph
