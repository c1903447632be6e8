#include "curvgraph/cheeger.hpp"

#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvgraph {

Thm1Bounds thm1_bounds(int p, int q, const Rational& C, const Rational& c) {
  const Rational cpq = structure_constant(p, q);
  if (C <= 0 || c <= 0)
    fail(ErrorCode::NonpositiveCurvatureGap,
         "curvature gaps C = " + to_string(C) + ", c = " + to_string(c) + " must be positive");
  Thm1Bounds out{2 * cpq * C, 2 * cpq * c};
  if (p != kInfinite) {
    if (out.physical > p - 2)
      fail(ErrorCode::DomainError, "physical bound " + to_string(out.physical) +
                                       " exceeds p - 2; C is too large for degree " +
                                       std::to_string(p));
    if (out.geometric > make_rational(p - 2, p))
      fail(ErrorCode::DomainError, "geometric bound " + to_string(out.geometric) +
                                       " exceeds (p-2)/p");
  }
  return out;
}

CheegerClosedForm regular_closed_form(int p, int q) {
  require_tessellation_parameters(p, q);
  if (p == kInfinite || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "closed form needs finite p and q");
  const long double y = static_cast<long double>(p - 2) * (q - 2);
  const long double root = std::sqrt(std::max(0.0L, 1 - 4 / y));
  const long double alpha = (p - 2) * root;
  return {static_cast<double>(alpha / p), static_cast<double>(alpha)};
}

Rational closed_form_upper_estimate(int p, int q) {
  require_tessellation_parameters(p, q);
  if (p == kInfinite || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "estimate needs finite p and q");
  const std::int64_t y = std::int64_t(p - 2) * (q - 2);
  return (p - 2) * (1 - make_rational(2, y - 1));
}

Rational mohar_bound(int p, int q) {
  require_tessellation_parameters(p, q);
  if (p == kInfinite || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "Mohar's estimate needs finite p and q");
  const Rational gap = make_rational(1, 2) - make_rational(1, p) - make_rational(1, q);
  return 2 * std::int64_t(p) * q * gap / (3 * q - 8);
}

TreeValues tree_values(int p) {
  if (p < 3 || p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "p must be at least 3");
  return {Rational(p - 2), make_rational(p - 2, 2)};
}

Rational tree_path_ratio(int p, int n) {
  if (p < 3 || n < 0) fail(ErrorCode::ParameterOutOfRange, "need p >= 3 and n >= 0");
  if (n == 0) return Rational(p);
  return make_rational(2 * std::int64_t(p - 1) + std::int64_t(n - 1) * (p - 2), n + 1);
}

namespace {

// Enumerates each connected vertex set once: sets are grown from their
// smallest vertex, adding only vertices from the exclusive neighbourhood.
class SubsetSearch {
 public:
  SubsetSearch(const PlanarGraph& g, std::vector<char> allowed, int max_size,
               std::int64_t budget)
      : g_(g), allowed_(std::move(allowed)), max_size_(max_size), budget_(budget),
        in_set_(g.vertex_count(), 0), touching_(g.vertex_count(), 0) {}

  BruteForceResult run() {
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (!allowed_[v]) continue;
      seed_ = v;
      std::vector<int> ext;
      add(v);
      for (int u : g_.rotation(v))
        if (allowed_[u] && u > v && touching_[u] == 1 && !in_set_[u]) ext.push_back(u);
      extend(ext);
      remove(v);
    }
    result_.max_size = max_size_;
    return result_;
  }

 private:
  void add(int v) {
    in_set_[v] = 1;
    set_.push_back(v);
    volume_ += g_.degree(v);
    edges_ += touching_[v];
    for (int u : g_.rotation(v)) ++touching_[u];
    record();
  }

  void remove(int v) {
    for (int u : g_.rotation(v)) --touching_[u];
    edges_ -= touching_[v];
    volume_ -= g_.degree(v);
    set_.pop_back();
    in_set_[v] = 0;
  }

  void extend(std::vector<int> ext) {
    if (static_cast<int>(set_.size()) >= max_size_) return;
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      std::vector<int> next_ext = ext;
      for (int u : g_.rotation(w))
        if (allowed_[u] && u > seed_ && !in_set_[u] && touching_[u] == 0)
          next_ext.push_back(u);
      add(w);
      extend(std::move(next_ext));
      remove(w);
    }
  }

  void record() {
    if (++result_.subsets > budget_)
      fail(ErrorCode::ResourceLimit,
           "subset enumeration exceeded budget " + std::to_string(budget_));
    const std::int64_t boundary = volume_ - 2 * edges_;
    const std::int64_t size = static_cast<std::int64_t>(set_.size());
    offer(best_physical_, boundary, size, result_.physical);
    offer(best_geometric_, boundary, volume_, result_.geometric);
  }

  struct Best {
    std::int64_t num = 0, den = 0;
  };

  void offer(Best& best, std::int64_t num, std::int64_t den, IsoperimetricMinimum& out) {
    bool better = best.den == 0;
    if (!better) {
      const __int128 lhs = static_cast<__int128>(num) * best.den;
      const __int128 rhs = static_cast<__int128>(best.num) * den;
      if (lhs < rhs) {
        better = true;
      } else if (lhs == rhs) {
        std::vector<int> sorted = set_;
        std::sort(sorted.begin(), sorted.end());
        better = sorted < out.witness;
      }
    }
    if (!better) return;
    best = {num, den};
    out.ratio = make_rational(num, den);
    out.witness = set_;
    std::sort(out.witness.begin(), out.witness.end());
  }

  const PlanarGraph& g_;
  std::vector<char> allowed_;
  int max_size_;
  std::int64_t budget_;
  std::vector<char> in_set_;
  std::vector<int> touching_;  // neighbours inside the current set
  std::vector<int> set_;
  std::int64_t volume_ = 0, edges_ = 0;
  int seed_ = 0;
  Best best_physical_, best_geometric_;
  BruteForceResult result_;
};

}  // namespace

BruteForceResult brute_force_isoperimetry(const PlanarGraph& g, int max_size,
                                          std::int64_t budget) {
  if (max_size < 1) fail(ErrorCode::InvalidInput, "max_size must be at least 1");
  std::vector<char> allowed(g.vertex_count(), 1);
  if (g.is_ball()) {
    for (int v = 0; v < g.vertex_count(); ++v)
      allowed[v] = g.distance_from_center(v) <= *g.interior_radius() - 1;
  }
  if (std::find(allowed.begin(), allowed.end(), 1) == allowed.end())
    fail(ErrorCode::NoInterior, "no vertex lies inside the interior radius");
  return SubsetSearch(g, std::move(allowed), max_size, budget).run();
}

}  // namespace curvgraph
