#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace oracle {

using curvgraph::PlanarGraph;
using curvgraph::Rational;

const std::vector<FrozenSeries>& frozen_series() {
  static const std::vector<FrozenSeries> table = {
      {3, 7, {1, 3, 6, 12, 18, 30, 45, 72, 111, 174, 270, 420}, "1869966", "155601558"},
      {7, 3, {1, 7, 21, 56, 147, 385, 1008, 2639, 6909, 18088, 47355, 123977},
       "10836061291440", "163917098439273795"},
      {4, 5, {1, 4, 12, 28, 64, 148, 340, 780, 1792, 4116, 9452, 21708}, "157526673524",
       "643079898813184"},
      {5, 4, {1, 5, 15, 40, 105, 275, 720, 1885, 4935, 12920, 33825, 88555}, "7740043779600",
       "117083641742338425"},
      {4, 6, {1, 4, 12, 32, 84, 220, 576, 1508, 3948, 10336, 27060, 70844}, "6192035023680",
       "93666913393870740"},
      {3, 8, {1, 3, 6, 12, 21, 36, 63, 108, 186, 321, 552, 951}, "29055096", "6664462752"},
      {4, 4, {1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44}, "120", "160"},
      {3, 6, {1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33}, "90", "120"},
      {6, 3, {1, 6, 12, 18, 24, 30, 36, 42, 48, 54, 60, 66}, "180", "240"},
      {8, 4,
       {1, 8, 48, 280, 1632, 9512, 55440, 323128, 1883328, 10976840, 63977712, 372889432},
       "130935110210938978837200", "5923383140030821178808077234112"},
      {4, 7, {1, 4, 12, 36, 100, 284, 800, 2260, 6380, 18012, 50852, 143564}, "52619169328544",
       "1692635378400921940"},
  };
  return table;
}

const FrozenSeries& frozen(int p, int q) {
  for (const auto& s : frozen_series())
    if (s.p == p && s.q == q) return s;
  throw std::out_of_range("no frozen series for this pair");
}

namespace {

using Point = std::pair<int, int>;

PlanarGraph lattice_ball(const std::vector<Point>& directions, int (*dist)(Point), int R) {
  std::vector<Point> points;
  for (int x = -R; x <= R; ++x)
    for (int y = -R; y <= R; ++y)
      if (dist({x, y}) <= R) points.push_back({x, y});
  std::stable_sort(points.begin(), points.end(),
                   [&](Point a, Point b) { return dist(a) < dist(b); });
  std::map<Point, int> index;
  for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  curvgraph::RotationTable rot(points.size());
  for (size_t i = 0; i < points.size(); ++i)
    for (auto [dx, dy] : directions) {
      auto it = index.find({points[i].first + dx, points[i].second + dy});
      if (it != index.end()) rot[i].push_back(it->second);
    }
  curvgraph::GraphOptions options;
  options.center = 0;
  options.interior_radius = R;
  return curvgraph::build_graph(rot, options);
}

int taxicab(Point a) { return std::abs(a.first) + std::abs(a.second); }
int hex(Point a) {
  return std::max({std::abs(a.first), std::abs(a.second), std::abs(a.first + a.second)});
}

}  // namespace

PlanarGraph square_lattice_ball(int R) {
  return lattice_ball({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, taxicab, R);
}

// Axial coordinates; the six directions in counter-clockwise order.
PlanarGraph triangular_lattice_ball(int R) {
  return lattice_ball({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, hex, R);
}

MaskMinimum bitmask_isoperimetry(const PlanarGraph& g, const std::vector<int>& allowed,
                                 int max_size) {
  const int k = static_cast<int>(allowed.size());
  if (k > 24) throw std::invalid_argument("too many vertices for the bitmask oracle");
  std::map<int, int> local;
  for (int i = 0; i < k; ++i) local[allowed[i]] = i;
  std::vector<unsigned> nbr(k, 0);
  for (int i = 0; i < k; ++i)
    for (int w : g.rotation(allowed[i]))
      if (auto it = local.find(w); it != local.end()) nbr[i] |= 1u << it->second;

  MaskMinimum best;
  bool found = false;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > max_size) continue;
    unsigned reached = mask & (~mask + 1), frontier = reached;
    while (frontier) {
      unsigned next = 0;
      for (int i = 0; i < k; ++i)
        if (frontier >> i & 1) next |= nbr[i];
      next &= mask & ~reached;
      reached |= next;
      frontier = next;
    }
    if (reached != mask) continue;
    ++best.connected_sets;
    long long volume = 0, inner = 0;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        volume += g.degree(allowed[i]);
        inner += __builtin_popcount(nbr[i] & mask);
      }
    const long long boundary = volume - inner;  // inner counts each edge twice
    const Rational phys = curvgraph::make_rational(boundary, size);
    const Rational geom = curvgraph::make_rational(boundary, volume);
    if (!found || phys < best.physical) best.physical = phys;
    if (!found || geom < best.geometric) best.geometric = geom;
    found = true;
  }
  return best;
}

double dense_dirichlet(const PlanarGraph& g, const std::vector<int>& region) {
  const int k = static_cast<int>(region.size());
  std::map<int, int> local;
  for (int i = 0; i < k; ++i) local[region[i]] = i;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(k, k);
  for (int i = 0; i < k; ++i)
    for (int w : g.rotation(region[i]))
      if (auto it = local.find(w); it != local.end())
        m(i, it->second) -= 1.0 / std::sqrt(double(g.degree(region[i])) * g.degree(w));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace oracle
