#pragma once

#include "curvgraph/planar_graph.hpp"
#include "curvgraph/rational.hpp"

#include <json.hpp>

#include <string>

namespace curvgraph {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Degree bounds read off a graph: p = max vertex degree, q = max bounded
/// face degree (kInfinite without bounded faces). `regular` when every
/// curvature-interior vertex has degree p and every bounded face degree q.
struct GraphParameters {
  int p = 0;
  int q = kInfinite;
  bool regular = false;
};
GraphParameters graph_parameters(const PlanarGraph& g);

/// Rationals as "n" or "n/d"; big integers as numbers when they fit in 64 bits.
Json rational_json(const Rational& r);
Json bigint_json(const BigInt& n);
/// kInfinite as "inf".
Json degree_json(int d);

Json graph_summary(const PlanarGraph& g);
Json curvature_report(const PlanarGraph& g);
Json cheeger_graph_report(const PlanarGraph& g, int max_size);
Json cheeger_regular_report(int p, int q);
Json growth_report(int p, int q, int n_max);
/// Columns n, recursion, series.
std::string growth_csv(int p, int q, int n_max);
Json roots_report(int p, int q);
Json spectral_report(const PlanarGraph& g);

}  // namespace curvgraph
