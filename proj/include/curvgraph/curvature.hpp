#pragma once

#include "curvgraph/planar_graph.hpp"
#include "curvgraph/rational.hpp"

namespace curvgraph {

/// 1/|v| + 1/|f| - 1/2; an unbounded face contributes exactly zero.
Rational corner_curvature(int vertex_degree, FaceDegree face_degree);
/// Errors: NotACorner.
Rational corner_curvature(const PlanarGraph& g, int v, int f);

/// Sum of corner curvatures, cross-checked against 1 - |v|/2 + sum 1/|f|.
/// Errors: BoundaryVertex.
Rational vertex_curvature(const PlanarGraph& g, int v);

/// Errors: BoundaryVertex.
Rational set_curvature(const VertexSet& w);
/// Errors: BoundaryVertex, EmptySet.
Rational average_curvature(const VertexSet& w);
/// Average curvature of the sphere S_n around the center.
Rational sphere_average_curvature(const PlanarGraph& g, int n);

struct HarmIdentity {
  Rational lhs;  ///< curvature of W
  Rational rhs;  ///< 2 - c(W) - |boundary edges|/2 + sum over boundary faces of |f cap W|/|f|
  bool equal() const { return lhs == rhs; }
};
/// Errors: DisconnectedInducedSubgraph, BoundaryVertex, EmptySet.
HarmIdentity harm_identity(const VertexSet& w);

/// Vertex curvature 1 - p/2 + p/q of G_{p,q}; q may be kInfinite.
Rational regular_vertex_curvature(int p, int q);

/// C_{p,q}, with p or q allowed to be kInfinite. Errors: ParameterOutOfRange.
Rational structure_constant(int p, int q);
/// q(p-2) / ((p-2)(q-2) - 2), read as its limit when p or q is infinite.
Rational structure_constant_closed_form(int p, int q);

/// Throws ParameterOutOfRange unless p, q >= 3 and 1/p + 1/q <= 1/2
/// (kInfinite accepted for either).
void require_tessellation_parameters(int p, int q);
/// 1/p + 1/q < 1/2; false for any pair that is not a tessellation type.
bool is_hyperbolic(int p, int q);

struct CurvatureInfima {
  Rational C;  ///< min over interior vertices of -kappa(v)
  Rational c;  ///< min over interior vertices of -kappa(v)/|v|
};
/// Errors: NoInterior.
CurvatureInfima curvature_infima(const PlanarGraph& g);

}  // namespace curvgraph
