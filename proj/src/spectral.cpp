#include "curvgraph/spectral.hpp"

#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"
#include "curvgraph/growth.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <cmath>
#include <string>

namespace curvgraph {

FujiwaraBounds fujiwara_bounds(double alpha_bar, double mu) {
  if (!(alpha_bar >= 0.0 && alpha_bar <= 1.0))
    fail(ErrorCode::DomainError, "alpha_bar = " + std::to_string(alpha_bar) + " outside [0,1]");
  if (!(mu >= 0.0)) fail(ErrorCode::DomainError, "mu must be non-negative");
  const long double a = alpha_bar;
  const long double lower = a * a / (1 + std::sqrt(1 - a * a));
  const long double e = std::exp(static_cast<long double>(mu) / 2);
  const long double upper = (e - 1) * (e - 1) / (1 + e * e);
  return {static_cast<double>(lower), static_cast<double>(upper)};
}

double mckean_bound(int p, int q, const Rational& c) {
  if (c <= 0)
    fail(ErrorCode::NonpositiveCurvatureGap, "c = " + to_string(c) + " must be positive");
  const Rational x = 2 * structure_constant(p, q) * c;
  if (x > 1) fail(ErrorCode::BoundExceedsOne, "2 C_{p,q} c = " + to_string(x) + " exceeds 1");
  const long double x2 = to_long_double(x * x);
  return static_cast<double>(x2 / (1 + std::sqrt(1 - x2)));
}

double ess_upper_regular(int p, int q) {
  long double x;
  if (q == kInfinite) {
    if (p < 3 || p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "p must be finite and at least 3");
    x = p - 1;
  } else {
    const auto root = largest_root(p, q);
    if (root.flat) return 0.0;
    x = root.x;
  }
  const long double s = std::sqrt(x);
  return static_cast<double>((s - 1) * (s - 1) / (1 + x));
}

std::vector<int> dirichlet_region(const PlanarGraph& g) {
  if (!g.is_ball()) fail(ErrorCode::NoInteriorMarked, "graph carries no interior radius");
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.distance_from_center(v) < *g.interior_radius()) out.push_back(v);
  return out;
}

DirichletResult dirichlet_lambda0(const VertexSet& region, double tolerance) {
  if (region.empty()) fail(ErrorCode::NoInterior, "Dirichlet region is empty");
  const PlanarGraph& g = region.host();
  const auto& members = region.members();
  const int n = region.size();
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) local[members[i]] = i;

  // S = I - D^{-1/2} A D^{-1/2} restricted to the region; similar to the
  // geometric Laplacian with Dirichlet conditions.
  std::vector<Eigen::Triplet<double>> entries;
  for (int i = 0; i < n; ++i) {
    const int v = members[i];
    entries.emplace_back(i, i, 1.0);
    for (int w : g.rotation(v)) {
      const int j = local[w];
      if (j < 0) continue;
      entries.emplace_back(i, j, -1.0 / std::sqrt(double(g.degree(v)) * g.degree(w)));
    }
  }
  Eigen::SparseMatrix<double> S(n, n);
  S.setFromTriplets(entries.begin(), entries.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(S);
  if (solver.info() != Eigen::Success) {
    // Singular when the region has no boundary; a tiny shift keeps it solvable.
    Eigen::SparseMatrix<double> identity(n, n);
    identity.setIdentity();
    solver.compute(S + 1e-9 * identity);
    if (solver.info() != Eigen::Success)
      fail(ErrorCode::ConvergenceFailure, "factorisation of the Dirichlet operator failed");
  }

  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = std::sqrt(double(g.degree(members[i])));
  x.normalize();

  DirichletResult out;
  out.size = n;
  constexpr int kMaxIterations = 100000;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    Eigen::VectorXd y = solver.solve(x);
    if (solver.info() != Eigen::Success)
      fail(ErrorCode::ConvergenceFailure, "linear solve failed");
    x = y.normalized();
    const Eigen::VectorXd sx = S * x;
    const double lambda = x.dot(sx);
    const double residual = (sx - lambda * x).norm();
    out.lambda0 = lambda;
    out.residual = residual;
    out.iterations = iter;
    if (residual <= tolerance) return out;
  }
  fail(ErrorCode::ConvergenceFailure, "inverse iteration stalled at residual " +
                                          std::to_string(out.residual));
}

}  // namespace curvgraph
