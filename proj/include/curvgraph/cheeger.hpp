#pragma once

#include "curvgraph/planar_graph.hpp"
#include "curvgraph/rational.hpp"

#include <cstdint>
#include <vector>

namespace curvgraph {

struct Thm1Bounds {
  Rational physical;   ///< 2 C_{p,q} C
  Rational geometric;  ///< 2 C_{p,q} c
};
/// Curvature lower bounds for the physical and geometric Cheeger constants.
/// Errors: NonpositiveCurvatureGap, ParameterOutOfRange, DomainError (a
/// bound above its ceiling p-2 resp. (p-2)/p).
Thm1Bounds thm1_bounds(int p, int q, const Rational& C, const Rational& c);

struct CheegerClosedForm {
  double alpha_bar;  ///< ((p-2)/p) sqrt(1 - 4/((p-2)(q-2)))
  double alpha;      ///< p * alpha_bar
};
/// Exact Cheeger constants of G_{p,q}. Errors: ParameterOutOfRange.
CheegerClosedForm regular_closed_form(int p, int q);

/// (p-2)(1 - 2/((p-2)(q-2) - 1)), the upper estimate for alpha(G_{p,q}).
Rational closed_form_upper_estimate(int p, int q);

/// 2pq c' / (3q - 8) with c' = 1/2 - 1/p - 1/q. Errors: ParameterOutOfRange.
Rational mohar_bound(int p, int q);

struct TreeValues {
  Rational alpha;      ///< p - 2
  Rational alpha_bar;  ///< (p - 2)/2, as stated for the volume normalisation
};
TreeValues tree_values(int p);
/// Physical ratio (2(p-1) + (n-1)(p-2)) / (n+1) of a path with n+1 vertices in T_p.
Rational tree_path_ratio(int p, int n);

struct IsoperimetricMinimum {
  Rational ratio;
  std::vector<int> witness;  ///< sorted; lexicographically smallest among ties
};

struct BruteForceResult {
  IsoperimetricMinimum physical;   ///< |boundary edges| / |W|
  IsoperimetricMinimum geometric;  ///< |boundary edges| / vol(W)
  std::int64_t subsets = 0;
  int max_size = 0;
};

inline constexpr std::int64_t kDefaultSubsetBudget = 200'000'000;

/// Minimum isoperimetric ratios over all connected W with |W| <= max_size.
/// Inside a ball only vertices strictly inside the interior radius are used,
/// so every boundary edge is visible. Errors: NoInterior, ResourceLimit.
BruteForceResult brute_force_isoperimetry(const PlanarGraph& g, int max_size,
                                          std::int64_t budget = kDefaultSubsetBudget);

}  // namespace curvgraph
