#include "curvgraph/generators.hpp"
#include "curvgraph/planar_graph.hpp"
#include "curvgraph/sampling.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace curvgraph;

namespace {

PlanarGraph cycle(int n, std::optional<int> radius = {}) {
  RotationTable rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  GraphOptions options;
  if (radius) {
    options.center = 0;
    options.interior_radius = radius;
  }
  return build_graph(rot, options);
}

// The four vertices of the square to the left of the first dart at the center.
std::vector<int> center_square(const PlanarGraph& g) {
  auto walk = g.face(g.corner_faces(0)[0]).boundary_walk;
  std::sort(walk.begin(), walk.end());
  return walk;
}

GraphOptions relaxed() {
  GraphOptions o;
  o.relaxed = true;
  return o;
}

int count_darts(const PlanarGraph& g) {
  int darts = 0;
  for (const auto& f : g.faces()) darts += static_cast<int>(f.boundary_walk.size());
  return darts;
}

}  // namespace

TEST_CASE("triangle has an inner and an outer face of degree 3") {
  const PlanarGraph g = cycle(3);
  REQUIRE(g.faces().size() == 2);
  for (const auto& f : g.faces()) CHECK(f.degree == FaceDegree::finite(3));
  CHECK(g.edge_count() == 3);
  CHECK(count_darts(g) == 6);
}

TEST_CASE("radius-2 square lattice ball") {
  const PlanarGraph g = oracle::square_lattice_ball(2);
  CHECK(g.vertex_count() == 13);
  for (size_t f = 0; f < g.faces().size(); ++f)
    if (!g.is_outer_face(static_cast<int>(f))) CHECK(g.face(static_cast<int>(f)).degree.value() == 4);
  CHECK(g.outer_face().has_value());
  CHECK(count_darts(g) == 2 * g.edge_count());
}

TEST_CASE("rotation table validation") {
  CHECK_ERROR(build_graph({{1}, {0, 0}}), ErrorCode::MultiEdge);
  CHECK_ERROR(build_graph({{1, 0}, {0}}), ErrorCode::LoopEdge);
  CHECK_ERROR(build_graph({{1, 2}, {0}, {1}}), ErrorCode::AsymmetricAdjacency);
  CHECK_ERROR(build_graph({{1}, {0}, {3}, {2}}, relaxed()), ErrorCode::Disconnected);
  CHECK_ERROR(build_graph({{5}, {0}}), ErrorCode::InvalidInput);
  CHECK_ERROR(build_graph({}), ErrorCode::InvalidInput);
  // a pendant vertex without a ball context is a leaf
  CHECK_ERROR(build_graph({{1, 2, 3}, {2, 0}, {0, 1}, {0}}), ErrorCode::Leaf);
  GraphOptions no_center;
  no_center.interior_radius = 1;
  CHECK_ERROR(build_graph({{1, 2}, {2, 0}, {0, 1}}, no_center), ErrorCode::InvalidInput);
}

TEST_CASE("single vertex is a valid graph with one face") {
  const PlanarGraph g = build_graph({{}}, relaxed());
  CHECK(g.vertex_count() == 1);
  CHECK(g.faces().size() == 1);
}

TEST_CASE("bfs_layers") {
  CHECK(bfs_layers(regular_tree_ball(3, 3), 0, 3).sigma == std::vector<std::int64_t>{1, 3, 6, 12});
  CHECK(bfs_layers(oracle::square_lattice_ball(2), 0, 2).sigma == std::vector<std::int64_t>{1, 4, 8});
  CHECK(bfs_layers(regular_tessellation_ball(3, 7, 4), 0, 4).sigma ==
        std::vector<std::int64_t>{1, 3, 6, 12, 18});
  CHECK_ERROR(bfs_layers(cycle(6), 0, 4), ErrorCode::RadiusExceedsGraph);
  CHECK_ERROR(bfs_layers(cycle(6), 9, 1), ErrorCode::InvalidInput);
}

TEST_CASE("cut locus") {
  CHECK(cut_locus(oracle::square_lattice_ball(4), 0).empty());
  CHECK(cut_locus(regular_tessellation_ball(3, 7, 5), 0).empty());
  CHECK(cut_locus(cycle(6, 4), 0) == std::vector<int>{3});
  CHECK_ERROR(cut_locus(cycle(6), 0), ErrorCode::NoInteriorMarked);
}

TEST_CASE("boundary data on the square lattice") {
  const PlanarGraph g = oracle::square_lattice_ball(3);
  const BoundaryData single = boundary_data(VertexSet(g, {0}));
  CHECK(single.edges.size() == 4);
  CHECK(single.external_degrees.at(0) == 4);
  CHECK(single.faces.size() == 4);

  const BoundaryData square = boundary_data(VertexSet(g, center_square(g)));
  CHECK(square.edges.size() == 8);
  CHECK(square.faces.size() == 8);

  const PlanarGraph tri = cycle(3);
  CHECK(boundary_data(VertexSet(tri, {0, 1, 2})).edges.empty());
  CHECK_ERROR(boundary_data(VertexSet(g, {})), ErrorCode::EmptySet);
}

TEST_CASE("subgraph counts") {
  const PlanarGraph g = oracle::square_lattice_ball(3);
  auto same = [](const SubgraphCounts& c, std::int64_t v, std::int64_t e, std::int64_t f,
                 std::int64_t enc, bool polygon) {
    CHECK(c.vertices == v);
    CHECK(c.edges == e);
    CHECK(c.faces == f);
    CHECK(c.enclosing == enc);
    CHECK(c.is_polygon == polygon);
  };
  same(subgraph_counts(VertexSet(g, {0})), 1, 0, 1, 1, true);
  same(subgraph_counts(VertexSet(g, center_square(g))), 4, 4, 2, 1, true);
  const int a = g.rotation(0)[0], b = g.rotation(0)[2];
  same(subgraph_counts(VertexSet(g, {a, 0, b})), 3, 2, 1, 1, true);

  // S_1 plus the four diagonal points: an 8-cycle around the center
  std::vector<int> ring;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation(v);
    const auto inner = std::count_if(rot.begin(), rot.end(),
                                     [&](int w) { return g.distance_from_center(w) == 1; });
    if (g.distance_from_center(v) == 1 || (g.distance_from_center(v) == 2 && inner == 2))
      ring.push_back(v);
  }
  REQUIRE(ring.size() == 8);
  const auto annulus = subgraph_counts(VertexSet(g, ring));
  CHECK(annulus.edges == 8);
  CHECK(annulus.enclosing == 2);
  CHECK_FALSE(annulus.is_polygon);

  CHECK_ERROR(subgraph_counts(VertexSet(g, {a, b})), ErrorCode::DisconnectedInducedSubgraph);
}

TEST_CASE("handshake and face incidence identities on random subsets") {
  std::mt19937_64 rng(7);
  for (const PlanarGraph& g :
       {oracle::square_lattice_ball(5), regular_tessellation_ball(3, 7, 6),
        regular_tessellation_ball(5, 4, 4), oracle::triangular_lattice_ball(4)}) {
    const std::vector<int> region = g.interior_vertices();
    for (int trial = 0; trial < 200; ++trial) {
      const int size = 1 + static_cast<int>(rng() % 20);
      const VertexSet w(g, random_connected_subset(g, region, size, rng));
      CHECK(handshake_check(w));
      const auto id = face_incidence_identity(w);
      CHECK_MESSAGE(id.holds(), to_string(id.corner_sum), " vs ", to_string(id.face_sum));
    }
  }
  const PlanarGraph g = oracle::square_lattice_ball(3);
  const VertexSet square(g, center_square(g));
  CHECK(handshake_check(square));  // 16 = 8 + 8
  CHECK(handshake_check(VertexSet(g, {0})));  // 4 = 0 + 4
}

TEST_CASE("c_counts") {
  const PlanarGraph g37 = regular_tessellation_ball(3, 7, 7);
  const auto c0 = c_counts(g37, 0, 0);
  for (int j = 1; j <= 5; ++j) CHECK(get_or_zero(c0, j) == 0);
  CHECK(get_or_zero(c0, 6) == 3);
  CHECK(c0.count(0) == 0);
  CHECK(c0.count(7) == 0);

  // Square lattice, n = 1: the four squares at the center have one vertex
  // outside B_1, the eight squares touching S_1 only have three.
  const PlanarGraph g44 = oracle::square_lattice_ball(4);
  const auto c1 = c_counts(g44, 0, 1);
  CHECK(get_or_zero(c1, 1) == 4);
  CHECK(get_or_zero(c1, 2) == 0);
  CHECK(get_or_zero(c1, 3) == 8);
  CHECK(get_or_zero(c1, 3) == get_or_zero(c1, 1) + 8 - 4);  // recurrence (iii)

  CHECK_ERROR(c_counts(regular_tessellation_ball(3, 7, 3), 0, 1), ErrorCode::HorizonExceeded);
  CHECK_ERROR(c_counts(cycle(6), 0, 0), ErrorCode::NoInteriorMarked);
}

TEST_CASE("c_counts recurrences on generated balls") {
  for (auto [p, q, R] : {std::tuple{3, 7, 9}, {4, 5, 7}, {5, 4, 6}, {7, 3, 5}, {4, 6, 6}, {3, 8, 9}}) {
    const PlanarGraph g = regular_tessellation_ball(p, q, R);
    const auto sigma = bfs_layers(g, 0, R).sigma;
    for (int n = 1; n + (q + 1) / 2 <= R && n + 1 <= R; ++n) {
      const auto prev = c_counts(g, 0, n - 1), cur = c_counts(g, 0, n);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(n);
      for (int l = 1; l <= q - 3; ++l) CHECK(get_or_zero(cur, l) == get_or_zero(prev, l + 2));
      CHECK(get_or_zero(cur, q - 2) == get_or_zero(prev, 2));
      CHECK(get_or_zero(cur, q - 1) == get_or_zero(cur, 1) + sigma[n + 1] - sigma[n]);
      if (q >= 4) CHECK(get_or_zero(cur, q - 1) == get_or_zero(prev, 3) + sigma[n + 1] - sigma[n]);
    }
  }
}

TEST_CASE("remove_intra_sphere_edges") {
  const PlanarGraph tree = regular_tree_ball(3, 4);
  CHECK(remove_intra_sphere_edges(tree, 0).rotation_table() == tree.rotation_table());

  const PlanarGraph g = regular_tessellation_ball(3, 7, 5);
  const PlanarGraph g0 = remove_intra_sphere_edges(g, 0);
  CHECK(g0.vertex_count() == g.vertex_count());
  CHECK(g0.edge_count() < g.edge_count());
  const auto d = g.distances_from(0), d0 = g0.distances_from(0);
  CHECK(d == d0);
  for (int v = 0; v < g0.vertex_count(); ++v)
    for (int w : g0.rotation(v)) CHECK(std::abs(d[v] - d[w]) == 1);

  // a 4-cycle around v0 has no intra-sphere edge; a 5-cycle loses its far edge
  CHECK(remove_intra_sphere_edges(cycle(4), 0).edge_count() == 4);
  const PlanarGraph p5 = remove_intra_sphere_edges(cycle(5), 0);
  CHECK(p5.edge_count() == 4);
  CHECK_FALSE(p5.adjacent(2, 3));
  CHECK(p5.distances_from(0) == cycle(5).distances_from(0));
}
