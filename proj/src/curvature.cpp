#include "curvgraph/curvature.hpp"

#include "curvgraph/error.hpp"

#include <algorithm>
#include <string>

namespace curvgraph {

namespace {

Rational inverse(int x) { return x == kInfinite ? Rational(0) : make_rational(1, x); }

}  // namespace

Rational corner_curvature(int vertex_degree, FaceDegree face_degree) {
  return make_rational(1, vertex_degree) + face_degree.reciprocal() - make_rational(1, 2);
}

Rational corner_curvature(const PlanarGraph& g, int v, int f) {
  if (v < 0 || v >= g.vertex_count() || f < 0 ||
      f >= static_cast<int>(g.faces().size()))
    fail(ErrorCode::NotACorner, "vertex or face out of range");
  const auto corners = g.corner_faces(v);
  if (std::find(corners.begin(), corners.end(), f) == corners.end())
    fail(ErrorCode::NotACorner,
         "vertex " + std::to_string(v) + " is not on face " + std::to_string(f));
  return corner_curvature(g.degree(v), g.face(f).degree);
}

Rational vertex_curvature(const PlanarGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    fail(ErrorCode::InvalidInput, "vertex out of range: " + std::to_string(v));
  if (!g.is_interior(v))
    fail(ErrorCode::BoundaryVertex,
         "vertex " + std::to_string(v) + " has faces outside the known region");
  Rational corners = 0;
  Rational reciprocals = 0;
  for (int f : g.corner_faces(v)) {
    corners += corner_curvature(g.degree(v), g.face(f).degree);
    reciprocals += g.face(f).degree.reciprocal();
  }
  const Rational closed = 1 - make_rational(g.degree(v), 2) + reciprocals;
  if (corners != closed)
    fail(ErrorCode::Internal, "corner sum and closed form disagree at vertex " +
                                  std::to_string(v));
  return corners;
}

Rational set_curvature(const VertexSet& w) {
  Rational total = 0;
  for (int v : w.members()) total += vertex_curvature(w.host(), v);
  return total;
}

Rational average_curvature(const VertexSet& w) {
  if (w.empty()) fail(ErrorCode::EmptySet, "average over an empty set");
  return set_curvature(w) / w.size();
}

Rational sphere_average_curvature(const PlanarGraph& g, int n) {
  if (!g.center()) fail(ErrorCode::NoInteriorMarked, "graph has no center");
  std::vector<int> sphere;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.distance_from_center(v) == n) sphere.push_back(v);
  return average_curvature(VertexSet(g, std::move(sphere)));
}

HarmIdentity harm_identity(const VertexSet& w) {
  HarmIdentity out;
  const SubgraphCounts counts = subgraph_counts(w);
  const BoundaryData boundary = boundary_data(w);
  out.lhs = set_curvature(w);
  out.rhs = Rational(2 - counts.enclosing) -
            make_rational(static_cast<std::int64_t>(boundary.edges.size()), 2);
  for (const auto& [f, inner] : boundary.inner_degrees)
    out.rhs += Rational(inner) * w.host().face(f).degree.reciprocal();
  return out;
}

void require_tessellation_parameters(int p, int q) {
  if (p < 3 || q < 3)
    fail(ErrorCode::ParameterOutOfRange, "p and q must be at least 3");
  if (p == kInfinite || q == kInfinite) return;
  if (inverse(p) + inverse(q) > make_rational(1, 2))
    fail(ErrorCode::ParameterOutOfRange,
         "1/p + 1/q > 1/2 for (p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

bool is_hyperbolic(int p, int q) {
  if (p < 3 || q < 3) return false;
  return inverse(p) + inverse(q) < make_rational(1, 2);
}

Rational regular_vertex_curvature(int p, int q) {
  if (p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "vertex degree must be finite");
  return 1 - make_rational(p, 2) + Rational(p) * inverse(q);
}

Rational structure_constant(int p, int q) {
  require_tessellation_parameters(p, q);
  if (q == kInfinite) return 1;
  const Rational face_term = 1 + make_rational(2, q - 2);
  if (p == kInfinite) return face_term;
  const std::int64_t y = std::int64_t(p - 2) * (q - 2) - 2;
  if (y <= 0)
    fail(ErrorCode::ParameterOutOfRange, "(p-2)(q-2) - 2 must be positive");
  return face_term * (1 + make_rational(2, y));
}

Rational structure_constant_closed_form(int p, int q) {
  require_tessellation_parameters(p, q);
  if (q == kInfinite) return 1;
  if (p == kInfinite) return make_rational(q, q - 2);
  const std::int64_t y = std::int64_t(p - 2) * (q - 2) - 2;
  if (y <= 0)
    fail(ErrorCode::ParameterOutOfRange, "(p-2)(q-2) - 2 must be positive");
  return make_rational(std::int64_t(q) * (p - 2), y);
}

CurvatureInfima curvature_infima(const PlanarGraph& g) {
  std::optional<CurvatureInfima> best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_interior(v)) continue;
    const Rational neg = -vertex_curvature(g, v);
    const Rational per_degree = neg / g.degree(v);
    if (!best) {
      best = CurvatureInfima{neg, per_degree};
    } else {
      best->C = std::min(best->C, neg);
      best->c = std::min(best->c, per_degree);
    }
  }
  if (!best) fail(ErrorCode::NoInterior, "graph has no interior vertex");
  return *best;
}

}  // namespace curvgraph
