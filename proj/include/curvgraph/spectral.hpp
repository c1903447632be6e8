#pragma once

#include "curvgraph/planar_graph.hpp"
#include "curvgraph/rational.hpp"

#include <vector>

namespace curvgraph {

struct FujiwaraBounds {
  double lower;      ///< 1 - sqrt(1 - alpha_bar^2)
  double ess_upper;  ///< 1 - 2 e^{mu/2} / (1 + e^mu)
};
/// Errors: DomainError (alpha_bar outside [0,1] or mu < 0).
FujiwaraBounds fujiwara_bounds(double alpha_bar, double mu);

/// 1 - sqrt(1 - (2 C_{p,q} c)^2); q may be kInfinite.
/// Errors: NonpositiveCurvatureGap (c <= 0), BoundExceedsOne, ParameterOutOfRange.
double mckean_bound(int p, int q, const Rational& c);

/// 1 - 2 sqrt(x)/(1 + x) with x the growth rate of G_{p,q}; x = p - 1 for q = kInfinite.
double ess_upper_regular(int p, int q);

struct DirichletResult {
  double lambda0 = 0.0;
  double residual = 0.0;
  int iterations = 0;
  int size = 0;
};
/// Bottom eigenvalue of the geometric Laplacian with zero boundary values
/// outside `region`, degrees taken in the host graph; inverse iteration on the
/// symmetrised operator until the residual is below `tolerance`.
/// Errors: NoInterior, ConvergenceFailure.
DirichletResult dirichlet_lambda0(const VertexSet& region, double tolerance = 1e-10);

/// Vertices strictly inside the interior radius. Errors: NoInteriorMarked.
std::vector<int> dirichlet_region(const PlanarGraph& g);

}  // namespace curvgraph
