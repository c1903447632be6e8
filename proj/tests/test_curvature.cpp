#include "curvgraph/curvature.hpp"
#include "curvgraph/generators.hpp"
#include "curvgraph/sampling.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace curvgraph;

namespace {
Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("corner curvature") {
  CHECK(corner_curvature(4, FaceDegree::finite(4)) == 0);
  CHECK(corner_curvature(3, FaceDegree::finite(7)) == r(-1, 42));
  CHECK(corner_curvature(3, FaceDegree::unbounded()) == r(-1, 6));

  const PlanarGraph g = regular_tessellation_ball(3, 7, 3);
  const int f = g.corner_faces(0)[0];
  CHECK(corner_curvature(g, 0, f) == r(-1, 42));
  int far = -1;
  for (size_t i = 0; i < g.faces().size(); ++i) {
    const auto& walk = g.face(static_cast<int>(i)).boundary_walk;
    if (std::find(walk.begin(), walk.end(), 0) == walk.end()) far = static_cast<int>(i);
  }
  REQUIRE(far >= 0);
  CHECK_ERROR(corner_curvature(g, 0, far), ErrorCode::NotACorner);
}

TEST_CASE("vertex and set curvature") {
  const PlanarGraph g44 = oracle::square_lattice_ball(4);
  for (int v : g44.interior_vertices()) CHECK(vertex_curvature(g44, v) == 0);

  const PlanarGraph g37 = regular_tessellation_ball(3, 7, 4);
  CHECK(vertex_curvature(g37, 0) == r(-1, 14));
  CHECK(sphere_average_curvature(g37, 1) == r(-1, 14));
  CHECK(set_curvature(VertexSet(g37, bfs_layers(g37, 0, 1).layers[1])) == r(-3, 14));
  CHECK(sphere_average_curvature(g44, 2) == 0);
  CHECK(average_curvature(VertexSet(g37, {0})) == vertex_curvature(g37, 0));

  const PlanarGraph tree = regular_tree_ball(3, 3);
  CHECK(vertex_curvature(tree, 0) == r(-1, 2));

  int rim = -1;
  for (int v = 0; v < g37.vertex_count(); ++v)
    if (g37.distance_from_center(v) == 4) rim = v;
  CHECK_ERROR(vertex_curvature(g37, rim), ErrorCode::BoundaryVertex);
  CHECK_ERROR(average_curvature(VertexSet(g37, {})), ErrorCode::EmptySet);
}

TEST_CASE("Gauss-Bonnet type identity for connected sets") {
  const PlanarGraph g44 = oracle::square_lattice_ball(5);
  const auto single = harm_identity(VertexSet(g44, {0}));
  CHECK(single.lhs == 0);
  CHECK(single.equal());
  auto square = g44.face(g44.corner_faces(0)[0]).boundary_walk;
  const auto sq = harm_identity(VertexSet(g44, square));
  CHECK(sq.lhs == 0);
  CHECK(sq.equal());

  std::mt19937_64 rng(11);
  for (const PlanarGraph& g : {regular_tessellation_ball(3, 7, 7), regular_tessellation_ball(4, 5, 5),
                               regular_tessellation_ball(7, 3, 4), oracle::triangular_lattice_ball(5)}) {
    const auto region = g.interior_vertices();
    for (int t = 0; t < 200; ++t) {
      const VertexSet w(g, random_connected_subset(g, region, 1 + static_cast<int>(rng() % 25), rng));
      const auto id = harm_identity(w);
      CHECK_MESSAGE(id.equal(), to_string(id.lhs), " vs ", to_string(id.rhs));
    }
  }
}

TEST_CASE("structure constant") {
  CHECK(structure_constant(5, kInfinite) == 1);
  CHECK(structure_constant(kInfinite, 3) == 3);
  CHECK(structure_constant(7, 3) == 5);
  CHECK(structure_constant(3, 7) == r(7, 3));
  for (int p = 3; p <= 12; ++p)
    for (int q = 3; q <= 12; ++q)
      if (is_hyperbolic(p, q)) CHECK(structure_constant(p, q) == structure_constant_closed_form(p, q));
  CHECK(structure_constant_closed_form(5, kInfinite) == 1);
  CHECK_ERROR(structure_constant(3, 5), ErrorCode::ParameterOutOfRange);
  CHECK_ERROR(structure_constant(2, 9), ErrorCode::ParameterOutOfRange);
}

TEST_CASE("regular vertex curvature and tessellation parameters") {
  CHECK(regular_vertex_curvature(3, 7) == r(-1, 14));
  CHECK(regular_vertex_curvature(4, 4) == 0);
  CHECK(regular_vertex_curvature(3, kInfinite) == r(-1, 2));
  CHECK(is_hyperbolic(3, 7));
  CHECK_FALSE(is_hyperbolic(3, 6));
  CHECK_FALSE(is_hyperbolic(4, 4));
  CHECK(is_hyperbolic(3, kInfinite));
}

TEST_CASE("curvature infima") {
  const auto g73 = curvature_infima(regular_tessellation_ball(7, 3, 3));
  CHECK(g73.C == r(1, 6));
  CHECK(g73.c == r(1, 42));
  const auto g44 = curvature_infima(oracle::square_lattice_ball(3));
  CHECK(g44.C == 0);
  CHECK(g44.c == 0);
  const auto t3 = curvature_infima(regular_tree_ball(3, 3));
  CHECK(t3.C == r(1, 2));
  CHECK(t3.c == r(1, 6));
  GraphOptions truncated;
  truncated.center = 0;
  truncated.interior_radius = 1;
  // all vertices of a truncated triangle touch the outer face
  CHECK_ERROR(curvature_infima(build_graph({{1, 2}, {2, 0}, {0, 1}}, truncated)), ErrorCode::NoInterior);
}
