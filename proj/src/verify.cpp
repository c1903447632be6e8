#include "curvgraph/verify.hpp"

#include "curvgraph/cheeger.hpp"
#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"
#include "curvgraph/generators.hpp"
#include "curvgraph/growth.hpp"
#include "curvgraph/sampling.hpp"
#include "curvgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace curvgraph {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json counterexample = nullptr;
};

Outcome verdict(bool pass, std::string detail, Json counterexample = nullptr) {
  return {pass, std::move(detail), pass ? Json(nullptr) : std::move(counterexample)};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string pair_label(int p, int q) {
  return "[" + std::to_string(p) + "," + (q == kInfinite ? std::string("inf") : std::to_string(q)) + "]";
}

class Suite {
 public:
  void run(const std::string& key, const std::string& module,
           const std::function<Outcome()>& body) {
    Json entry;
    entry["key"] = key;
    entry["module"] = module;
    try {
      const Outcome out = body();
      entry["pass"] = out.pass;
      entry["detail"] = out.detail;
      entry["counterexample"] = out.counterexample;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ResourceLimit) partial_ = true;
      entry["pass"] = false;
      entry["detail"] = std::string(error_code_name(e.code())) + ": " + e.what();
      entry["counterexample"] = nullptr;
    } catch (const std::exception& e) {
      entry["pass"] = false;
      entry["detail"] = std::string("unexpected: ") + e.what();
      entry["counterexample"] = nullptr;
    }
    entries_.emplace(key, std::move(entry));
  }

  void skip(const std::string& key, const std::string& module, const std::string& why) {
    run(key, module, [&]() { return Outcome{false, "not run: " + why}; });
  }

  Json report(const VerifyConfig& config) {
    Json out;
    out["schema"] = kSchemaVersion;
    out["kind"] = "verify";
    out["config"] = {{"p_min", config.p_min},       {"p_max", config.p_max},
                     {"q_min", config.q_min},       {"q_max", config.q_max},
                     {"radius", config.radius},     {"brute_radius", config.brute_radius},
                     {"brute_max_size", config.brute_max_size},
                     {"subsets", config.subsets},   {"series_terms", config.series_terms},
                     {"comparison_terms", config.comparison_terms},
                     {"seed", config.seed},         {"budget", config.budget}};
    Json checks = Json::array();
    int passed = 0;
    for (auto& [key, entry] : entries_) {
      if (entry["pass"].get<bool>()) ++passed;
      checks.push_back(std::move(entry));
    }
    const int total = static_cast<int>(checks.size());
    out["checks"] = std::move(checks);
    out["passed"] = passed;
    out["failed"] = total - passed;
    out["partial"] = partial_;
    out["all_pass"] = passed == total && !partial_;
    return out;
  }

 private:
  std::map<std::string, Json> entries_;
  bool partial_ = false;
};

GrowthSeries bfs_sigma(const PlanarGraph& g) {
  const auto layers = bfs_layers(g, *g.center(), *g.interior_radius());
  return GrowthSeries(layers.sigma.begin(), layers.sigma.end());
}

bool palindromic(const GrowthPolynomial& poly) {
  const auto& c = poly.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

Outcome identity_suite(const PlanarGraph& g, int count, std::uint64_t seed) {
  const auto interior = g.interior_vertices();
  if (interior.empty()) return {false, "no interior vertices"};
  std::mt19937_64 rng(seed);
  const int largest = std::min<int>(30, static_cast<int>(interior.size()));
  for (int t = 0; t < count; ++t) {
    const int size = std::uniform_int_distribution<int>(1, largest)(rng);
    const auto members = random_connected_subset(g, interior, size, rng);
    const VertexSet w(g, members);
    const auto counts = subgraph_counts(w);  // asserts Euler's formula
    const bool handshake = handshake_check(w);
    const bool incidence = face_incidence_identity(w).holds();
    const auto harm = harm_identity(w);
    if (!handshake || !incidence || !harm.equal() || counts.enclosing < 1)
      return {false, "identity failed on subset " + std::to_string(t), Json(members)};
  }
  return {true, std::to_string(count) + " connected subsets: Euler, handshake, incidence, curvature identity"};
}

Outcome c_recurrences(const PlanarGraph& g, int q) {
  const auto dist = g.center_distances();
  auto sigma = [&](int n) {
    return static_cast<std::int64_t>(std::count(dist.begin(), dist.end(), n));
  };
  const int R = *g.interior_radius();
  int checked = 0;
  for (int n = 1; n + (q + 1) / 2 <= R; ++n) {
    const auto now = c_counts(g, 0, n);
    const auto before = c_counts(g, 0, n - 1);
    bool ok = true;
    for (int l = 1; l <= q - 3; ++l) ok = ok && now.at(l) == before.at(l + 2);
    ok = ok && now.at(q - 2) == before.at(2);
    ok = ok && now.at(q - 1) == now.at(1) + sigma(n + 1) - sigma(n);
    if (q >= 4) ok = ok && now.at(q - 1) == before.at(3) + sigma(n + 1) - sigma(n);
    if (!ok) return {false, "recurrence fails at n = " + std::to_string(n), Json(n)};
    ++checked;
  }
  return {true, std::to_string(checked) + " admissible n"};
}

void pair_checks(Suite& suite, const VerifyConfig& config, int p, int q) {
  const std::string tag = pair_label(p, q);
  const bool hyperbolic = is_hyperbolic(p, q);
  const auto poly = growth_polynomials(p, q);

  // Graph-free checks.
  suite.run("growth.recursion_vs_series" + tag, "growth", [&]() {
    const int n = config.series_terms;
    const auto series = series_expand(poly.h, poly.g, n);
    const auto rec = sphere_recursion(regular_curvature_sequence(p, q, n), series[1], n).integers();
    for (int k = 0; k <= n; ++k)
      if (rec[k] != series[k]) return verdict(false, "differ at n = " + std::to_string(k), k);
    return verdict(true, "n <= " + std::to_string(n));
  });
  suite.run("growth.recursion_terms" + tag, "growth", [&]() {
    const auto terms = regular_recursion_terms(p, q);
    const int N = b_coefficients(q).N;
    for (int l = 0; l < N; ++l) {
      const Rational expected = (q % 2 == 1 && l == (N - 1) / 2) ? Rational(p - 4) : Rational(p - 2);
      if (terms[l] != expected) return verdict(false, "term " + std::to_string(l), l);
    }
    return verdict(true, "b_l - kappa_n exact");
  });
  suite.run("growth.reciprocal" + tag, "growth", [&]() {
    const bool ok = palindromic(poly.g) && palindromic(poly.h) && poly.g[0] == 1 && poly.h[0] == 1;
    return verdict(ok, "g = " + poly.g.to_string() + ", h = " + poly.h.to_string());
  });
  suite.run("growth.largest_root" + tag, "growth", [&]() {
    const auto root = largest_root(p, q);  // asserts the bracket (1, p-1)
    return verdict(root.flat == !hyperbolic, "x = " + std::to_string(root.x));
  });
  if (q == 3 || q == 4 || q == 6) {
    suite.run("growth.closed_form" + tag, "growth", [&]() {
      const auto root = largest_root(p, q);
      const double diff = std::abs(std::exp(mu_closed_form(p, q)) - root.x);
      const bool divisible = divide_exact(poly.g, quadratic_factor(p, q)).has_value();
      return verdict(diff <= 1e-12 && divisible,
                     "|exp(mu) - x| = " + std::to_string(diff) + (divisible ? ", divisible" : ", not divisible"));
    });
  }
  if (hyperbolic) {
    suite.run("growth.salem" + tag, "growth", [&]() {
      const auto analysis = root_analysis(poly.g);
      const double x = largest_root(p, q).x;
      const bool ok = analysis.salem_ok && analysis.mahler >= 1.1762 &&
                      std::abs(analysis.mahler - x) <= 1e-8;
      return verdict(ok, "M = " + std::to_string(analysis.mahler), analysis.off_circle);
    });
    suite.run("growth.mu_lower_bound" + tag, "growth", [&]() {
      const double lower = mu_lower_bound(p, q), mu = largest_root(p, q).mu();
      return verdict(lower <= mu && mu < std::log(p - 1.0),
                     std::to_string(lower) + " <= " + std::to_string(mu) + " < log(p-1)");
    });
    suite.run("cheeger.chain" + tag, "cheeger", [&]() {
      const Rational C = -regular_vertex_curvature(p, q);
      const auto thm1 = thm1_bounds(p, q, C, C / p);  // also checks both ceilings
      const auto closed = regular_closed_form(p, q);
      const double physical = to_double(thm1.physical);
      bool ok = physical <= closed.alpha + 1e-12 &&
                closed.alpha <= to_double(closed_form_upper_estimate(p, q)) + 1e-12;
      if (q >= 4) ok = ok && mohar_bound(p, q) <= thm1.physical;
      return verdict(ok, "thm1 = " + to_string(thm1.physical) + ", alpha = " + std::to_string(closed.alpha));
    });
  }
  suite.run("generators.tree_dominates" + tag, "generators", [&]() {
    const auto series = series_expand(poly.h, poly.g, config.series_terms);
    BigInt tree = p;
    for (int n = 1; n <= config.series_terms; ++n, tree *= p - 1)
      if (series[n] > tree) return verdict(false, "sigma exceeds the tree at n = " + std::to_string(n), n);
    return verdict(true, "sigma_n(G) <= sigma_n(T_p)");
  });

  // Checks on a generated ball.
  std::optional<PlanarGraph> ball;
  suite.run("generators.ball" + tag, "generators", [&]() {
    ball = regular_tessellation_ball(p, q, config.radius, config.budget);
    return verdict(true, std::to_string(ball->vertex_count()) + " vertices, certified");
  });
  const std::vector<std::pair<std::string, std::string>> dependent = {
      {"growth.bfs_vs_series", "growth"},  {"growth.tree_bound", "growth"},
      {"growth.ball_identity", "growth"},  {"planar.c_recurrences", "planar_core"},
      {"planar.face_closure", "planar_core"}, {"planar.identities", "planar_core"},
      {"planar.cut_locus", "planar_core"}, {"planar.edge_removal", "planar_core"},
      {"curvature.regular", "curvature"},  {"cheeger.bruteforce", "cheeger"},
      {"spectral.sandwich", "spectral"},   {"spectral.monotone", "spectral"}};
  if (!ball) {
    for (const auto& [key, module] : dependent) suite.skip(key + tag, module, "no ball");
    return;
  }
  const PlanarGraph& g = *ball;

  suite.run("growth.bfs_vs_series" + tag, "growth", [&]() {
    const auto sigma = bfs_sigma(g);
    const auto series = series_expand(poly.h, poly.g, config.radius);
    const auto rec = sphere_recursion(regular_curvature_sequence(p, q, config.radius),
                                      sigma.size() > 1 ? sigma[1] : BigInt(p), config.radius).integers();
    return verdict(sigma == series && sigma == rec, "n <= " + std::to_string(config.radius));
  });
  suite.run("growth.tree_bound" + tag, "growth", [&]() {
    const auto report = tree_bound_check(bfs_sigma(g), p);
    return verdict(report.holds, "sigma_n <= p(p-1)^(n-1)",
                   report.first_violation ? Json(*report.first_violation) : Json(nullptr));
  });
  suite.run("growth.ball_identity" + tag, "growth", [&]() {
    int checked = 0;
    for (int n = 1; n + (q + 1) / 2 <= config.radius; ++n, ++checked)
      if (!ball_curvature_identity(g, 0, n).holds())
        return verdict(false, "fails at n = " + std::to_string(n), n);
    return verdict(true, std::to_string(checked) + " admissible n");
  });
  suite.run("planar.c_recurrences" + tag, "planar_core", [&]() { return c_recurrences(g, q); });
  suite.run("planar.face_closure" + tag, "planar_core", [&]() {
    std::int64_t darts = 0;
    for (const auto& f : g.faces()) darts += static_cast<std::int64_t>(f.boundary_walk.size());
    return verdict(darts == 2 * g.edge_count(), std::to_string(darts) + " darts in face walks");
  });
  suite.run("planar.identities" + tag, "planar_core", [&]() {
    return identity_suite(g, config.subsets, config.seed ^ fnv1a(tag));
  });
  suite.run("planar.cut_locus" + tag, "planar_core", [&]() {
    const auto cut = cut_locus(g, 0);
    return verdict(cut.empty(), std::to_string(cut.size()) + " cut-locus vertices", cut);
  });
  suite.run("planar.edge_removal" + tag, "planar_core", [&]() {
    const PlanarGraph reduced = remove_intra_sphere_edges(g, 0);  // asserts distances
    const auto& dist = reduced.center_distances();
    for (int v = 0; v < reduced.vertex_count(); ++v)
      for (int w : reduced.rotation(v))
        if (std::abs(dist[v] - dist[w]) != 1)
          return verdict(false, "edge within a sphere survives", Json::array({v, w}));
    return verdict(true, std::to_string(g.edge_count() - reduced.edge_count()) + " edges removed");
  });
  suite.run("curvature.regular" + tag, "curvature", [&]() {
    const Rational expected = regular_vertex_curvature(p, q);
    for (int v : g.interior_vertices())
      if (vertex_curvature(g, v) != expected) return verdict(false, "vertex curvature", v);
    for (int n = 0; n + (q + 1) / 2 <= config.radius; ++n)
      if (sphere_average_curvature(g, n) != expected) return verdict(false, "sphere average", n);
    const bool sign_ok = (expected >= 0) == !hyperbolic && (hyperbolic || expected == 0);
    return verdict(sign_ok, "kappa = " + to_string(expected));
  });
  suite.run("cheeger.bruteforce" + tag, "cheeger", [&]() {
    const PlanarGraph small = regular_tessellation_ball(p, q, config.brute_radius, config.budget);
    const auto brute = brute_force_isoperimetry(small, config.brute_max_size);
    if (!hyperbolic) return verdict(true, "flat: bounds vacuous");
    const Rational C = -regular_vertex_curvature(p, q);
    const auto thm1 = thm1_bounds(p, q, C, C / p);
    const bool ok = brute.physical.ratio >= thm1.physical && brute.geometric.ratio >= thm1.geometric;
    return verdict(ok, "min ratio " + to_string(brute.physical.ratio) + " >= " + to_string(thm1.physical),
                   brute.physical.witness);
  });
  suite.run("spectral.sandwich" + tag, "spectral", [&]() {
    if (!hyperbolic) return verdict(true, "flat: bound vacuous");
    if (config.radius < 5) return verdict(true, "radius below 5: not applicable");
    const Rational c = -regular_vertex_curvature(p, q) / p;
    const double lower = mckean_bound(p, q, c);
    const double lambda = dirichlet_lambda0(VertexSet(g, dirichlet_region(g))).lambda0;
    return verdict(lower <= lambda, std::to_string(lower) + " <= " + std::to_string(lambda));
  });
  suite.run("spectral.monotone" + tag, "spectral", [&]() {
    double previous = 2.0;
    for (int r = 1; r <= config.radius; ++r) {
      const PlanarGraph h = r == config.radius ? g : regular_tessellation_ball(p, q, r, config.budget);
      const double lambda = dirichlet_lambda0(VertexSet(h, dirichlet_region(h))).lambda0;
      if (lambda > previous + 1e-12) return verdict(false, "increase at radius " + std::to_string(r), r);
      previous = lambda;
    }
    return verdict(true, "non-increasing up to radius " + std::to_string(config.radius));
  });
}

void tree_checks(Suite& suite, const VerifyConfig& config, int p) {
  const std::string tag = pair_label(p, kInfinite);
  suite.run("cheeger.tree_sharpness" + tag, "cheeger", [&]() {
    const Rational C = -regular_vertex_curvature(p, kInfinite);
    const auto thm1 = thm1_bounds(p, kInfinite, C, C / p);
    const auto tree = tree_values(p);
    const bool ok = thm1.physical == tree.alpha && thm1.geometric == make_rational(p - 2, p);
    return verdict(ok, "thm1 = (" + to_string(thm1.physical) + ", " + to_string(thm1.geometric) +
                           "), stated tree values (" + to_string(tree.alpha) + ", " +
                           to_string(tree.alpha_bar) + ")");
  });
  suite.run("spectral.tree_sharpness" + tag, "spectral", [&]() {
    const double sharp = 1 - 2 * std::sqrt(p - 1.0) / p;
    const Rational c = make_rational(p - 2, 2 * p);
    const double lower = mckean_bound(p, kInfinite, c);
    const double upper = ess_upper_regular(p, kInfinite);
    const auto fuji = fujiwara_bounds(double(p - 2) / p, std::log(p - 1.0));
    const bool ok = std::abs(lower - sharp) <= 1e-12 && std::abs(upper - sharp) <= 1e-12 &&
                    std::abs(fuji.lower - sharp) <= 1e-12 && std::abs(fuji.ess_upper - sharp) <= 1e-12;
    return verdict(ok, "1 - 2 sqrt(p-1)/p = " + std::to_string(sharp));
  });
  suite.run("generators.tree" + tag, "generators", [&]() {
    const PlanarGraph t = regular_tree_ball(p, config.radius, config.budget);
    const auto sigma = bfs_sigma(t);
    BigInt expected = p;
    for (int n = 1; n <= config.radius; ++n, expected *= p - 1)
      if (sigma[n] != expected) return verdict(false, "sigma differs at n = " + std::to_string(n), n);
    const bool tight = tree_bound_check(sigma, p).holds && cut_locus(t, 0).empty();
    return verdict(tight, "sigma_n = p(p-1)^(n-1)");
  });
}

}  // namespace

Json verify_all(const VerifyConfig& config) {
  if (config.p_min < 3 || config.q_min < 3 || config.p_max < config.p_min ||
      config.q_max < config.q_min || config.radius < 1 || config.brute_radius < 1 ||
      config.brute_max_size < 1 || config.subsets < 0 || config.series_terms < 1 ||
      config.comparison_terms < 1 || config.budget < 0)
    fail(ErrorCode::InvalidInput, "invalid verification config");

  Suite suite;
  std::map<int, std::vector<int>> by_face_degree;
  for (int p = config.p_min; p <= config.p_max; ++p) {
    for (int q = config.q_min; q <= config.q_max; ++q) {
      if (2 * (p + q) > p * q) continue;  // spherical
      pair_checks(suite, config, p, q);
      if (is_hyperbolic(p, q)) by_face_degree[q].push_back(p);
    }
    tree_checks(suite, config, p);
  }

  for (const auto& [q, ps] : by_face_degree) {
    for (size_t i = 0; i < ps.size(); ++i) {
      for (size_t j = i + 1; j < ps.size(); ++j) {
        const int p = ps[i], pt = ps[j];
        suite.run("growth.comparison[" + std::to_string(p) + "-" + std::to_string(pt) + "," +
                      std::to_string(q) + "]",
                  "growth", [&]() {
                    const int n = config.comparison_terms;
                    auto run = [&](int pp) {
                      const auto kappa = regular_curvature_sequence(pp, q, n);
                      const BigInt sigma1 = pp;
                      return sphere_recursion(kappa, sigma1, n).integers();
                    };
                    const auto cmp = compare_growth(run(p), run(pt));
                    return verdict(cmp.nonneg && cmp.monotone, "difference non-negative and non-decreasing",
                                   cmp.first_violation ? Json(*cmp.first_violation) : Json(nullptr));
                  });
      }
    }
  }
  return suite.report(config);
}

}  // namespace curvgraph
