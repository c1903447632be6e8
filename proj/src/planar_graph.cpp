#include "curvgraph/planar_graph.hpp"

#include "curvgraph/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace curvgraph {

namespace {

std::vector<int> bfs_distances(const std::vector<int>& offsets,
                               const std::vector<int>& adjacency, int source) {
  const int n = static_cast<int>(offsets.size()) - 1;
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int i = offsets[v]; i < offsets[v + 1]; ++i) {
      const int w = adjacency[i];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Faces of a rotation system given in CSR form. `reverse[d]` is the slot of the
// tail of dart d inside the rotation of its head.
std::vector<std::vector<int>> trace_faces(const std::vector<int>& offsets,
                                          const std::vector<int>& adjacency,
                                          const std::vector<int>& reverse,
                                          std::vector<int>& dart_face) {
  const int n = static_cast<int>(offsets.size()) - 1;
  std::vector<int> tail(adjacency.size());
  for (int v = 0; v < n; ++v)
    for (int i = offsets[v]; i < offsets[v + 1]; ++i) tail[i] = v;

  dart_face.assign(adjacency.size(), -1);
  std::vector<std::vector<int>> walks;
  for (size_t start = 0; start < adjacency.size(); ++start) {
    if (dart_face[start] >= 0) continue;
    const int id = static_cast<int>(walks.size());
    std::vector<int> walk;
    size_t d = start;
    do {
      dart_face[d] = id;
      walk.push_back(tail[d]);
      const int head = adjacency[d];
      const int deg = offsets[head + 1] - offsets[head];
      d = static_cast<size_t>(offsets[head] + (reverse[d] + 1) % deg);
    } while (d != start);
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::vector<int> reverse_slots(const std::vector<int>& offsets,
                               const std::vector<int>& adjacency) {
  const int n = static_cast<int>(offsets.size()) - 1;
  std::vector<int> reverse(adjacency.size(), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = offsets[v]; i < offsets[v + 1]; ++i) {
      const int w = adjacency[i];
      for (int j = offsets[w]; j < offsets[w + 1]; ++j) {
        if (adjacency[j] == v) {
          reverse[i] = j - offsets[w];
          break;
        }
      }
    }
  }
  return reverse;
}

std::string vertex_label(int v) { return "vertex " + std::to_string(v); }

}  // namespace

int FaceDegree::value() const {
  if (is_unbounded()) fail(ErrorCode::InvalidInput, "face degree is unbounded");
  return value_;
}

Rational FaceDegree::reciprocal() const {
  if (is_unbounded()) return Rational(0);
  return make_rational(1, value_);
}

int PlanarGraph::slot_of(int v, int w) const {
  const auto rot = rotation(v);
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == w) return static_cast<int>(i);
  return -1;
}

int PlanarGraph::face_of_dart(int v, int w) const {
  const int slot = slot_of(v, w);
  if (slot < 0)
    fail(ErrorCode::InvalidInput,
         "no edge " + std::to_string(v) + " -> " + std::to_string(w));
  return dart_face_[offsets_[v] + slot];
}

bool PlanarGraph::is_interior(int v) const {
  if (!is_ball()) return true;
  if (center_distances_[v] >= *options_.interior_radius) return false;
  if (outer_model_ == OuterFaceModel::Infinigon) return true;
  for (int f : corner_faces(v))
    if (is_outer_face(f)) return false;
  return true;
}

std::vector<int> PlanarGraph::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_interior(v)) out.push_back(v);
  return out;
}

std::vector<int> PlanarGraph::distances_from(int v0) const {
  if (v0 < 0 || v0 >= vertex_count())
    fail(ErrorCode::InvalidInput, "vertex out of range: " + std::to_string(v0));
  return bfs_distances(offsets_, adjacency_, v0);
}

RotationTable PlanarGraph::rotation_table() const {
  RotationTable table(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    const auto rot = rotation(v);
    table[v].assign(rot.begin(), rot.end());
  }
  return table;
}

PlanarGraph build_graph(const RotationTable& table, const GraphOptions& options) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorCode::InvalidInput, "graph has no vertices");

  PlanarGraph g;
  g.options_ = options;
  g.offsets_.resize(n + 1, 0);
  for (int v = 0; v < n; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(table[v].size());
  g.adjacency_.reserve(g.offsets_[n]);

  for (int v = 0; v < n; ++v) {
    for (int w : table[v]) {
      if (w < 0 || w >= n)
        fail(ErrorCode::InvalidInput,
             vertex_label(v) + " lists out-of-range neighbour " + std::to_string(w));
      if (w == v) fail(ErrorCode::LoopEdge, vertex_label(v) + " has a loop");
      g.adjacency_.push_back(w);
    }
    std::vector<int> sorted = table[v];
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      fail(ErrorCode::MultiEdge,
           vertex_label(v) + " lists neighbour " + std::to_string(*dup) + " twice");
  }

  const std::vector<int> reverse = reverse_slots(g.offsets_, g.adjacency_);
  for (int v = 0; v < n; ++v) {
    for (int i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      if (reverse[i] < 0)
        fail(ErrorCode::AsymmetricAdjacency,
             vertex_label(v) + " lists " + std::to_string(g.adjacency_[i]) +
                 " but not conversely");
    }
  }

  {
    const auto dist = bfs_distances(g.offsets_, g.adjacency_, 0);
    const auto it = std::find(dist.begin(), dist.end(), -1);
    if (it != dist.end())
      fail(ErrorCode::Disconnected,
           vertex_label(static_cast<int>(it - dist.begin())) +
               " is unreachable from vertex 0");
  }

  if (options.center && (*options.center < 0 || *options.center >= n))
    fail(ErrorCode::InvalidInput, "center out of range");
  if (options.interior_radius) {
    if (!options.center)
      fail(ErrorCode::InvalidInput, "interior_radius requires a center");
    if (*options.interior_radius < 0)
      fail(ErrorCode::InvalidInput, "interior_radius must be non-negative");
  }
  if (options.center)
    g.center_distances_ = bfs_distances(g.offsets_, g.adjacency_, *options.center);

  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 2 || options.relaxed) continue;
    const bool on_rim = options.interior_radius &&
                        g.center_distances_[v] >= *options.interior_radius;
    if (!on_rim)
      fail(ErrorCode::Leaf, vertex_label(v) + " has degree " +
                                std::to_string(g.degree(v)));
  }

  auto walks = trace_faces(g.offsets_, g.adjacency_, reverse, g.dart_face_);
  if (walks.empty()) walks.push_back({0});  // A single isolated vertex.

  if (g.is_ball()) {
    g.outer_model_ = options.outer_model.value_or(
        g.edge_count() == n - 1 ? OuterFaceModel::Infinigon
                                : OuterFaceModel::Truncated);
    if (g.edge_count() == 0) {
      g.outer_face_ = 0;
    } else if (options.outer_dart) {
      const auto [u, w] = *options.outer_dart;
      if (u < 0 || u >= n || w < 0 || w >= n || g.slot_of(u, w) < 0)
        fail(ErrorCode::InvalidInput, "outer_dart is not an edge of the graph");
      g.outer_face_ = g.face_of_dart(u, w);
    } else {
      const int far = *std::max_element(g.center_distances_.begin(),
                                        g.center_distances_.end());
      std::pair<size_t, size_t> best{0, 0};
      int best_face = 0;
      for (size_t f = 0; f < walks.size(); ++f) {
        size_t rim = 0;
        for (int v : walks[f])
          if (g.center_distances_[v] == far) ++rim;
        const std::pair<size_t, size_t> score{rim, walks[f].size()};
        if (score > best) {
          best = score;
          best_face = static_cast<int>(f);
        }
      }
      g.outer_face_ = best_face;
    }
  }

  g.faces_.reserve(walks.size());
  for (size_t f = 0; f < walks.size(); ++f) {
    Face face;
    face.degree = g.is_outer_face(static_cast<int>(f))
                      ? FaceDegree::unbounded()
                      : FaceDegree::finite(static_cast<int>(walks[f].size()));
    face.boundary_walk = std::move(walks[f]);
    g.faces_.push_back(std::move(face));
  }

  if (!options.relaxed) {
    std::vector<int> stamp(n, -1);
    for (size_t f = 0; f < g.faces_.size(); ++f) {
      if (g.is_outer_face(static_cast<int>(f))) continue;
      for (int v : g.faces_[f].boundary_walk) {
        if (stamp[v] == static_cast<int>(f))
          fail(ErrorCode::InvalidFace, "face " + std::to_string(f) +
                                           " visits " + vertex_label(v) +
                                           " twice");
        stamp[v] = static_cast<int>(f);
      }
    }
    for (int v = 0; v < n; ++v) {
      for (int i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
        const int w = g.adjacency_[i];
        if (w < v) continue;
        const int f1 = g.dart_face_[i];
        const int f2 = g.dart_face_[g.offsets_[w] + reverse[i]];
        if (f1 == f2 && !g.is_outer_face(f1))
          fail(ErrorCode::InvalidFace, "edge " + std::to_string(v) + "-" +
                                           std::to_string(w) +
                                           " borders a single face twice");
      }
    }
  }
  return g;
}

VertexSet::VertexSet(const PlanarGraph& host, std::vector<int> members)
    : host_(&host), members_(std::move(members)), mask_(host.vertex_count(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int v : members_) {
    if (v < 0 || v >= host.vertex_count())
      fail(ErrorCode::InvalidInput, "vertex set member out of range: " + std::to_string(v));
    mask_[v] = 1;
  }
}

SphereDecomposition bfs_layers(const PlanarGraph& g, int v0, int radius) {
  if (radius < 0) fail(ErrorCode::InvalidInput, "radius must be non-negative");
  const auto dist = g.distances_from(v0);
  const int ecc = *std::max_element(dist.begin(), dist.end());
  if (radius > ecc)
    fail(ErrorCode::RadiusExceedsGraph,
         "radius " + std::to_string(radius) + " exceeds eccentricity " +
             std::to_string(ecc) + " of vertex " + std::to_string(v0));
  SphereDecomposition s;
  s.center = v0;
  s.layers.resize(radius + 1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] <= radius) s.layers[dist[v]].push_back(v);
  for (const auto& layer : s.layers)
    s.sigma.push_back(static_cast<std::int64_t>(layer.size()));
  return s;
}

std::vector<int> cut_locus(const PlanarGraph& g, int v0) {
  if (!g.is_ball())
    fail(ErrorCode::NoInteriorMarked, "cut locus needs an interior radius");
  if (v0 != *g.center())
    fail(ErrorCode::NoInteriorMarked,
         "the interior radius is measured from the center " +
             std::to_string(*g.center()));
  const auto& dist = g.center_distances();
  const int r = *g.interior_radius();
  std::vector<int> out;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (dist[w] >= r || w == v0) continue;
    bool local_max = true;
    for (int u : g.rotation(w))
      if (dist[u] > dist[w]) {
        local_max = false;
        break;
      }
    if (local_max) out.push_back(w);
  }
  return out;
}

BoundaryData boundary_data(const VertexSet& w) {
  if (w.empty()) fail(ErrorCode::EmptySet, "boundary of an empty set");
  const PlanarGraph& g = w.host();
  BoundaryData out;
  std::set<int> faces;
  for (int v : w.members()) {
    int external = 0;
    for (int u : g.rotation(v)) {
      if (w.contains(u)) continue;
      ++external;
      out.edges.emplace_back(v, u);
      faces.insert(g.face_of_dart(v, u));
      faces.insert(g.face_of_dart(u, v));
    }
    out.external_degrees[v] = external;
    if (external > 0) out.vertices.push_back(v);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.faces.assign(faces.begin(), faces.end());
  for (int f : out.faces) {
    std::set<int> inside;
    for (int v : g.face(f).boundary_walk)
      if (w.contains(v)) inside.insert(v);
    out.inner_degrees[f] = static_cast<int>(inside.size());
  }
  return out;
}

SubgraphCounts subgraph_counts(const VertexSet& w) {
  if (w.empty()) fail(ErrorCode::EmptySet, "counts of an empty set");
  const PlanarGraph& g = w.host();
  const auto& members = w.members();
  const int k = w.size();
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) -
                            members.begin());
  };

  std::vector<int> offsets(k + 1, 0);
  std::vector<int> adjacency;
  for (int i = 0; i < k; ++i) {
    for (int u : g.rotation(members[i]))
      if (w.contains(u)) adjacency.push_back(local(u));
    offsets[i + 1] = static_cast<int>(adjacency.size());
  }

  const auto dist = bfs_distances(offsets, adjacency, 0);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end())
    fail(ErrorCode::DisconnectedInducedSubgraph, "induced subgraph is disconnected");

  SubgraphCounts out;
  out.vertices = k;
  out.edges = static_cast<std::int64_t>(adjacency.size()) / 2;
  if (adjacency.empty()) {
    out.faces = 1;
  } else {
    std::vector<int> dart_face;
    const auto reverse = reverse_slots(offsets, adjacency);
    out.faces = static_cast<std::int64_t>(
        trace_faces(offsets, adjacency, reverse, dart_face).size());
  }
  if (out.vertices - out.edges + out.faces != 2)
    fail(ErrorCode::Internal, "Euler's formula fails on an induced subgraph");

  std::set<int> candidates;
  for (int v : members)
    for (int f : g.corner_faces(v))
      if (!g.is_outer_face(f)) candidates.insert(f);
  std::int64_t enclosed = 0;
  for (int f : candidates) {
    const auto& walk = g.face(f).boundary_walk;
    if (std::all_of(walk.begin(), walk.end(), [&](int v) { return w.contains(v); }))
      ++enclosed;
  }
  out.enclosing = out.faces - enclosed;
  out.is_polygon = out.enclosing == 1;
  return out;
}

bool handshake_check(const VertexSet& w) {
  const PlanarGraph& g = w.host();
  std::int64_t degree_sum = 0, inner_darts = 0, boundary = 0;
  for (int v : w.members()) {
    degree_sum += g.degree(v);
    for (int u : g.rotation(v)) (w.contains(u) ? inner_darts : boundary) += 1;
  }
  return degree_sum == inner_darts + boundary;
}

FaceIncidenceIdentity face_incidence_identity(const VertexSet& w) {
  const PlanarGraph& g = w.host();
  const SubgraphCounts counts = subgraph_counts(w);
  const BoundaryData boundary = boundary_data(w);
  FaceIncidenceIdentity out;
  for (int v : w.members())
    for (int f : g.corner_faces(v)) out.corner_sum += g.face(f).degree.reciprocal();
  out.face_sum = Rational(counts.faces - counts.enclosing);
  for (const auto& [f, inner] : boundary.inner_degrees)
    out.face_sum += Rational(inner) * g.face(f).degree.reciprocal();
  return out;
}

int regular_face_degree(const PlanarGraph& g, int n) {
  if (!g.is_ball())
    fail(ErrorCode::NoInteriorMarked, "face counters need a ball with interior radius");
  const auto& dist = g.center_distances();
  std::optional<int> q;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] > n) continue;
    for (int f : g.corner_faces(v)) {
      if (g.is_outer_face(f))
        fail(ErrorCode::HorizonExceeded,
             "ball B_" + std::to_string(n) + " touches the outer face");
      const int d = g.face(f).degree.value();
      if (q && *q != d)
        fail(ErrorCode::NotFaceRegular, "faces of degree " + std::to_string(*q) +
                                            " and " + std::to_string(d) + " meet B_" +
                                            std::to_string(n));
      q = d;
    }
  }
  if (!q) fail(ErrorCode::NotFaceRegular, "no faces meet the ball");
  return *q;
}

std::map<int, std::int64_t> c_counts(const PlanarGraph& g, int v0, int n) {
  if (!g.is_ball())
    fail(ErrorCode::NoInteriorMarked, "face counters need a ball with interior radius");
  if (v0 != *g.center())
    fail(ErrorCode::NoInteriorMarked, "face counters are taken around the center");
  if (n < 0) fail(ErrorCode::InvalidInput, "n must be non-negative");
  const int q = regular_face_degree(g, n);
  if (n + (q + 1) / 2 > *g.interior_radius())
    fail(ErrorCode::HorizonExceeded,
         "n + ceil(q/2) = " + std::to_string(n + (q + 1) / 2) +
             " exceeds interior radius " + std::to_string(*g.interior_radius()));

  const auto& dist = g.center_distances();
  std::set<int> meeting;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] <= n)
      for (int f : g.corner_faces(v)) meeting.insert(f);

  std::map<int, std::int64_t> out;
  for (int j = 1; j <= q - 1; ++j) out[j] = 0;
  for (int f : meeting) {
    int outside = 0;
    for (int v : g.face(f).boundary_walk)
      if (dist[v] > n) ++outside;
    if (outside >= 1 && outside <= q - 1) ++out[outside];
  }
  return out;
}

PlanarGraph remove_intra_sphere_edges(const PlanarGraph& g, int v0) {
  const auto dist = g.distances_from(v0);
  RotationTable table(g.vertex_count());
  std::vector<int> parent(g.faces().size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.rotation(v)) {
      if (dist[u] != dist[v]) {
        table[v].push_back(u);
      } else {
        const int a = find_root(parent, g.face_of_dart(v, u));
        const int b = find_root(parent, g.face_of_dart(u, v));
        parent[a] = b;
      }
    }
  }

  GraphOptions options = g.options();
  options.relaxed = true;
  options.outer_model = g.outer_model();
  options.outer_dart.reset();
  if (g.outer_face()) {
    const int outer_class = find_root(parent, *g.outer_face());
    for (int v = 0; v < g.vertex_count() && !options.outer_dart; ++v)
      for (int u : table[v])
        if (find_root(parent, g.face_of_dart(v, u)) == outer_class) {
          options.outer_dart = std::make_pair(v, u);
          break;
        }
  }

  PlanarGraph reduced = build_graph(table, options);
  if (reduced.distances_from(v0) != dist)
    fail(ErrorCode::Internal, "edge removal changed distances to the center");
  return reduced;
}

}  // namespace curvgraph
