#pragma once

#include "curvgraph/reports.hpp"

#include <cstdint>

namespace curvgraph {

struct VerifyConfig {
  int p_min = 3, p_max = 8;
  int q_min = 3, q_max = 8;
  int radius = 5;               ///< ball radius per grid point
  int brute_radius = 3;         ///< smaller ball for exhaustive subset search
  int brute_max_size = 6;
  int subsets = 1000;           ///< random connected subsets per graph
  int series_terms = 40;        ///< recursion vs series length
  int comparison_terms = 30;
  std::uint64_t seed = 0;
  std::int64_t budget = 1'000'000;
};

/// Runs every property check over the parameter grid. The report lists one
/// entry per check, sorted by key, with "all_pass" false if any check failed
/// or could not run ("partial" is set when a resource limit was hit).
Json verify_all(const VerifyConfig& config);

}  // namespace curvgraph
