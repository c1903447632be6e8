#include "curvgraph/generators.hpp"

#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"
#include "curvgraph/growth.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace curvgraph {

namespace {

constexpr std::int64_t kDefaultBudget = 1'000'000;
constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::string pq_label(int p, int q) {
  return "G_{" + std::to_string(p) + "," + (q == kInfinite ? std::string("inf") : std::to_string(q)) + "}";
}

// A growing disc of q-gons. Rotations are counter-clockwise and every
// boundary vertex stores its rotation as [next, ..., prev], so the sector
// from prev back to next is the still-open exterior.
class Frontier {
 public:
  Frontier(int p, int q, std::int64_t cap) : p_(p), q_(q), cap_(cap) {
    for (int i = 0; i < q; ++i) new_vertex();
    for (int i = 0; i < q; ++i) {
      next_[i] = (i + 1) % q;
      prev_[i] = (i + q - 1) % q;
      rot_[i] = {next_[i], prev_[i]};
    }
  }

  void complete(int v) {
    for (int guard = 0; on_boundary_[v]; ++guard) {
      if (guard > p_) fail(ErrorCode::GenerationFailed, "vertex never closes up");
      add_face(v);
    }
  }

  int size() const { return static_cast<int>(rot_.size()); }
  bool on_boundary(int v) const { return on_boundary_[v] != 0; }
  int next(int v) const { return next_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }

 private:
  // Faces still missing around a boundary vertex: it carries deg - 1 faces.
  int remaining(int v) const { return p_ - static_cast<int>(rot_[v].size()) + 1; }

  int new_vertex() {
    if (static_cast<std::int64_t>(rot_.size()) >= cap_)
      fail(ErrorCode::ResourceLimit, "construction exceeded " + std::to_string(cap_) + " vertices");
    rot_.emplace_back();
    next_.push_back(-1);
    prev_.push_back(-1);
    on_boundary_.push_back(1);
    return static_cast<int>(rot_.size()) - 1;
  }

  // Attaches the face lying outside the boundary edge (v, next(v)). Boundary
  // vertices with one face left are absorbed into the face together with
  // their neighbouring boundary edges.
  void add_face(int v) {
    int a = v;
    int b = next_[v];
    int run = 0;
    while (remaining(a) == 1) {
      a = prev_[a];
      if (++run > q_) fail(ErrorCode::GenerationFailed, "boundary closed up");
    }
    while (remaining(b) == 1) {
      b = next_[b];
      if (++run > q_) fail(ErrorCode::GenerationFailed, "boundary closed up");
    }
    if (a == b || remaining(a) < 2 || remaining(b) < 2)
      fail(ErrorCode::GenerationFailed, "no room for a new face at vertex " + std::to_string(v));
    int k = 0;
    for (int x = next_[a]; x != b; x = next_[x]) ++k;
    const int fresh = q_ - (k + 2);
    if (fresh < 0)
      fail(ErrorCode::GenerationFailed, "face would exceed degree " + std::to_string(q_));

    for (int x = next_[a]; x != b; x = next_[x]) on_boundary_[x] = 0;
    if (fresh == 0) {
      if (std::find(rot_[a].begin(), rot_[a].end(), b) != rot_[a].end())
        fail(ErrorCode::GenerationFailed, "closing edge would duplicate an edge");
      rot_[a].insert(rot_[a].begin(), b);
      rot_[b].push_back(a);
      next_[a] = b;
      prev_[b] = a;
      return;
    }
    std::vector<int> path(fresh + 2);
    path.front() = b;
    path.back() = a;
    for (int j = 1; j <= fresh; ++j) path[j] = new_vertex();
    for (int j = 1; j <= fresh; ++j) {
      const int y = path[j];
      rot_[y] = {path[j - 1], path[j + 1]};
      next_[y] = path[j - 1];
      prev_[y] = path[j + 1];
    }
    rot_[a].insert(rot_[a].begin(), path[fresh]);
    next_[a] = path[fresh];
    rot_[b].push_back(path[1]);
    prev_[b] = path[1];
  }

  int p_, q_;
  std::int64_t cap_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> next_, prev_;
  std::vector<char> on_boundary_;
};

std::vector<int> distances(const std::vector<std::vector<int>>& rot, int source) {
  std::vector<int> dist(rot.size(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : rot[queue[head]])
      if (dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
  return dist;
}

void check_budget(std::int64_t predicted, std::int64_t budget, const std::string& what) {
  if (predicted > budget)
    fail(ErrorCode::ResourceLimit, what + " needs " +
                                       (predicted == kSaturated ? std::string("more than 2^63")
                                                                : std::to_string(predicted)) +
                                       " vertices; budget is " + std::to_string(budget));
}

std::int64_t saturating_sum(const GrowthSeries& sigma) {
  BigInt total = 0;
  for (const auto& s : sigma) total += s;
  return total > kSaturated ? kSaturated : total.convert_to<std::int64_t>();
}

}  // namespace

std::int64_t generation_budget() {
  const char* env = std::getenv("CURVGRAPH_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (*end != '\0' || value < 0)
    fail(ErrorCode::InvalidInput, std::string("CURVGRAPH_BUDGET is not a count: ") + env);
  return value;
}

std::int64_t predicted_ball_size(int p, int q, int R) {
  if (R < 0) fail(ErrorCode::ParameterOutOfRange, "radius must be non-negative");
  if (q == kInfinite) {
    BigInt total = 1, sphere = p;
    for (int n = 1; n <= R; ++n) {
      total += sphere;
      sphere *= p - 1;
    }
    return total > kSaturated ? kSaturated : total.convert_to<std::int64_t>();
  }
  const auto poly = growth_polynomials(p, q);
  return saturating_sum(series_expand(poly.h, poly.g, R));
}

PlanarGraph regular_tree_ball(int p, int R) { return regular_tree_ball(p, R, generation_budget()); }

PlanarGraph regular_tree_ball(int p, int R, std::int64_t budget) {
  if (p < 3 || p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "tree degree must be at least 3");
  if (R < 0) fail(ErrorCode::ParameterOutOfRange, "radius must be non-negative");
  check_budget(predicted_ball_size(p, kInfinite, R), budget, "tree ball T_" + std::to_string(p));

  RotationTable table(1);
  std::vector<int> depth{0};
  for (size_t v = 0; v < table.size(); ++v) {
    if (depth[v] == R) continue;
    const int children = v == 0 ? p : p - 1;
    for (int c = 0; c < children; ++c) {
      const int child = static_cast<int>(table.size());
      table[v].push_back(child);
      table.push_back({static_cast<int>(v)});
      depth.push_back(depth[v] + 1);
    }
  }
  GraphOptions options;
  options.center = 0;
  options.interior_radius = R;
  options.outer_model = OuterFaceModel::Infinigon;
  return build_graph(table, options);
}

PlanarGraph regular_tessellation_ball(int p, int q, int R) {
  return regular_tessellation_ball(p, q, R, generation_budget());
}

PlanarGraph regular_tessellation_ball(int p, int q, int R, std::int64_t budget) {
  if (q == kInfinite) return regular_tree_ball(p, R, budget);
  require_tessellation_parameters(p, q);
  if (p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "vertex degree must be finite");
  if (R < 1) fail(ErrorCode::ParameterOutOfRange, "radius must be at least 1");

  const auto poly = growth_polynomials(p, q);
  const GrowthSeries expected = series_expand(poly.h, poly.g, R);
  const std::int64_t predicted = saturating_sum(expected);
  const std::string label = pq_label(p, q) + " ball of radius " + std::to_string(R);
  check_budget(predicted, budget, label);

  // Faces around the last completed sphere reach up to q/2 layers further.
  const std::int64_t cap = std::max<std::int64_t>(4096, predicted * (std::int64_t(p) * q + 1));
  Frontier frontier(p, q, cap);
  frontier.complete(0);
  for (int k = 1; k < R; ++k) {
    const auto dist = distances(frontier.rotations(), 0);
    int start = -1;
    for (int v = 0; v < frontier.size() && start < 0; ++v)
      if (frontier.on_boundary(v)) start = v;
    if (start < 0) fail(ErrorCode::GenerationFailed, "boundary vanished");
    std::vector<int> layer;
    int v = start;
    do {
      if (dist[v] <= k) layer.push_back(v);
      v = frontier.next(v);
    } while (v != start);
    for (int u : layer)
      if (frontier.on_boundary(u)) frontier.complete(u);
  }

  // Cut out B_R, numbering vertices in breadth-first discovery order.
  const auto& rot = frontier.rotations();
  const auto dist = distances(rot, 0);
  std::vector<int> order{0};
  std::vector<int> index(rot.size(), -1);
  index[0] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    for (int w : rot[order[head]]) {
      if (index[w] >= 0 || dist[w] > R) continue;
      index[w] = static_cast<int>(order.size());
      order.push_back(w);
    }
  }

  RotationTable table(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : rot[order[i]])
      if (index[w] >= 0) table[i].push_back(index[w]);

  // Outer dart: at a vertex of the last sphere, the first ball neighbour
  // after a gap left by a missing neighbour (or by the open exterior sector).
  std::optional<std::pair<int, int>> outer;
  for (size_t i = 0; i < order.size() && !outer; ++i) {
    const int u = order[i];
    if (dist[u] != R) continue;
    std::vector<int> around = rot[u];
    if (frontier.on_boundary(u)) around.push_back(-1);
    const int m = static_cast<int>(around.size());
    int gap = -1;
    for (int j = 0; j < m && gap < 0; ++j)
      if (around[j] < 0 || index[around[j]] < 0) gap = j;
    if (gap < 0) continue;
    for (int j = 1; j < m; ++j) {
      const int w = around[(gap + j) % m];
      if (w >= 0 && index[w] >= 0) {
        outer = std::make_pair(static_cast<int>(i), index[w]);
        break;
      }
    }
  }

  GraphOptions options;
  options.center = 0;
  options.interior_radius = R;
  options.outer_model = OuterFaceModel::Truncated;
  options.outer_dart = outer;
  PlanarGraph g;
  try {
    g = build_graph(table, options);
  } catch (const Error& e) {
    fail(ErrorCode::GenerationFailed, label + " failed validation: " + e.what());
  }

  // Certification against the growth series and the local structure.
  const auto layers = bfs_layers(g, 0, R);
  for (int n = 0; n <= R; ++n)
    if (BigInt(layers.sigma[n]) != expected[n])
      fail(ErrorCode::GenerationFailed,
           label + ": sigma_" + std::to_string(n) + " = " + std::to_string(layers.sigma[n]) +
               " but the growth series gives " + to_string(expected[n]));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.distance_from_center(v) < R && g.degree(v) != p)
      fail(ErrorCode::GenerationFailed, label + ": vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(g.degree(v)));
  for (size_t f = 0; f < g.faces().size(); ++f)
    if (!g.is_outer_face(static_cast<int>(f)) && g.face(static_cast<int>(f)).degree.value() != q)
      fail(ErrorCode::GenerationFailed, label + ": face " + std::to_string(f) + " has degree " +
                                            std::to_string(g.face(static_cast<int>(f)).degree.value()));
  return g;
}

}  // namespace curvgraph
