#include "curvgraph/reports.hpp"

#include "curvgraph/cheeger.hpp"
#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"
#include "curvgraph/growth.hpp"
#include "curvgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace curvgraph {

namespace {

Json base(const char* kind) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["kind"] = kind;
  return out;
}

Json polynomial_json(const GrowthPolynomial& poly) { return poly.coefficients(); }

bool valid_parameters(int p, int q) {
  try {
    require_tessellation_parameters(p, q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json bigint_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

Json degree_json(int d) { return d == kInfinite ? Json("inf") : Json(d); }

GraphParameters graph_parameters(const PlanarGraph& g) {
  GraphParameters out;
  for (int v = 0; v < g.vertex_count(); ++v) out.p = std::max(out.p, g.degree(v));
  int q = 0;
  for (size_t f = 0; f < g.faces().size(); ++f)
    if (!g.face(static_cast<int>(f)).degree.is_unbounded())
      q = std::max(q, g.face(static_cast<int>(f)).degree.value());
  out.q = q == 0 ? kInfinite : q;
  out.regular = true;
  for (int v = 0; v < g.vertex_count() && out.regular; ++v)
    if (g.is_interior(v) && g.degree(v) != out.p) out.regular = false;
  for (size_t f = 0; f < g.faces().size() && out.regular; ++f) {
    const auto& d = g.face(static_cast<int>(f)).degree;
    if (!d.is_unbounded() && d.value() != out.q) out.regular = false;
  }
  return out;
}

Json graph_summary(const PlanarGraph& g) {
  Json out = base("graph");
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["faces"] = g.faces().size();
  out["center"] = g.center() ? Json(*g.center()) : Json(nullptr);
  out["interior_radius"] = g.interior_radius() ? Json(*g.interior_radius()) : Json(nullptr);
  if (g.is_ball()) {
    const auto layers = bfs_layers(g, *g.center(), *g.interior_radius());
    out["sigma"] = layers.sigma;
  }
  return out;
}

Json curvature_report(const PlanarGraph& g) {
  Json out = base("curvature");
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json row;
    row["vertex"] = v;
    row["degree"] = g.degree(v);
    row["distance"] = g.center() ? Json(g.distance_from_center(v)) : Json(nullptr);
    row["interior"] = g.is_interior(v);
    row["kappa"] = g.is_interior(v) ? rational_json(vertex_curvature(g, v)) : Json(nullptr);
    vertices.push_back(std::move(row));
  }
  out["vertices"] = std::move(vertices);

  Json spheres = Json::array();
  if (g.center()) {
    const auto& dist = g.center_distances();
    const int far = *std::max_element(dist.begin(), dist.end());
    for (int n = 0; n <= far; ++n) {
      std::vector<int> sphere;
      bool known = true;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == n) {
          sphere.push_back(v);
          known = known && g.is_interior(v);
        }
      Json row;
      row["n"] = n;
      row["sigma"] = sphere.size();
      row["average_kappa"] =
          known ? rational_json(average_curvature(VertexSet(g, sphere))) : Json(nullptr);
      spheres.push_back(std::move(row));
    }
  }
  out["spheres"] = std::move(spheres);

  try {
    const auto inf = curvature_infima(g);
    out["C"] = rational_json(inf.C);
    out["c"] = rational_json(inf.c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoInterior) throw;
    out["C"] = nullptr;
    out["c"] = nullptr;
  }
  return out;
}

Json cheeger_graph_report(const PlanarGraph& g, int max_size) {
  Json out = base("cheeger");
  const auto params = graph_parameters(g);
  out["p"] = degree_json(params.p);
  out["q"] = degree_json(params.q);
  out["regular"] = params.regular;

  std::optional<CurvatureInfima> inf;
  try {
    inf = curvature_infima(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoInterior) throw;
  }
  out["C"] = inf ? rational_json(inf->C) : Json(nullptr);
  out["c"] = inf ? rational_json(inf->c) : Json(nullptr);

  std::optional<Thm1Bounds> thm1;
  if (inf && inf->C > 0 && inf->c > 0 && valid_parameters(params.p, params.q))
    thm1 = thm1_bounds(params.p, params.q, inf->C, inf->c);
  out["physical_lower"] = thm1 ? rational_json(thm1->physical) : Json(nullptr);
  out["geometric_lower"] = thm1 ? rational_json(thm1->geometric) : Json(nullptr);

  const bool finite = params.q != kInfinite && valid_parameters(params.p, params.q);
  out["mohar_lower"] = finite ? rational_json(mohar_bound(params.p, params.q)) : Json(nullptr);
  if (finite && params.regular) {
    const auto closed = regular_closed_form(params.p, params.q);
    out["closed_form"] = {{"alpha_bar", closed.alpha_bar}, {"alpha", closed.alpha}};
  } else {
    out["closed_form"] = nullptr;
  }

  const auto brute = brute_force_isoperimetry(g, max_size);
  out["max_size"] = max_size;
  out["subsets"] = brute.subsets;
  out["bruteforce_min_physical"] = {{"ratio", rational_json(brute.physical.ratio)},
                                    {"witness", brute.physical.witness}};
  out["bruteforce_min_geometric"] = {{"ratio", rational_json(brute.geometric.ratio)},
                                     {"witness", brute.geometric.witness}};
  if (thm1) {
    out["bounds_hold"] = brute.physical.ratio >= thm1->physical &&
                         brute.geometric.ratio >= thm1->geometric;
  } else {
    out["bounds_hold"] = nullptr;
  }
  return out;
}

Json cheeger_regular_report(int p, int q) {
  require_tessellation_parameters(p, q);
  Json out = base("cheeger_regular");
  out["p"] = degree_json(p);
  out["q"] = degree_json(q);
  out["C_pq"] = rational_json(structure_constant(p, q));
  const Rational kappa = regular_vertex_curvature(p, q);
  const Rational C = -kappa;
  const Rational c = C / p;
  out["C"] = rational_json(C);
  out["c"] = rational_json(c);
  if (C > 0) {
    const auto thm1 = thm1_bounds(p, q, C, c);
    out["thm1_physical"] = rational_json(thm1.physical);
    out["thm1_geometric"] = rational_json(thm1.geometric);
  } else {
    out["thm1_physical"] = nullptr;
    out["thm1_geometric"] = nullptr;
  }
  if (q == kInfinite) {
    const auto tree = tree_values(p);
    out["mohar"] = nullptr;
    out["tree_alpha"] = rational_json(tree.alpha);
    out["tree_alpha_bar"] = rational_json(tree.alpha_bar);
  } else {
    out["mohar"] = rational_json(mohar_bound(p, q));
    const auto closed = regular_closed_form(p, q);
    out["alpha"] = closed.alpha;
    out["alpha_bar"] = closed.alpha_bar;
    out["alpha_upper_estimate"] = rational_json(closed_form_upper_estimate(p, q));
  }
  return out;
}

Json growth_report(int p, int q, int n_max) {
  const auto poly = growth_polynomials(p, q);
  const auto series = series_expand(poly.h, poly.g, n_max);
  const auto kappa = regular_curvature_sequence(p, q, n_max);
  const auto recursion = sphere_recursion(kappa, n_max >= 1 ? series[1] : BigInt(p), n_max).integers();

  Json out = base("growth");
  out["p"] = p;
  out["q"] = q;
  out["N"] = b_coefficients(q).N;
  out["h"] = polynomial_json(poly.h);
  out["g"] = polynomial_json(poly.g);
  Json rows = Json::array();
  bool agree = true;
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back({{"n", n}, {"recursion", bigint_json(recursion[n])},
                    {"series", bigint_json(series[n])}});
    agree = agree && recursion[n] == series[n];
  }
  out["rows"] = std::move(rows);
  out["agree"] = agree;
  return out;
}

std::string growth_csv(int p, int q, int n_max) {
  const Json report = growth_report(p, q, n_max);
  std::ostringstream out;
  out << "n,recursion,series\n";
  auto cell = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& row : report["rows"])
    out << row["n"].get<int>() << ',' << cell(row["recursion"]) << ',' << cell(row["series"])
        << '\n';
  return out.str();
}

Json roots_report(int p, int q) {
  const auto poly = growth_polynomials(p, q);
  Json out = base("roots");
  out["p"] = p;
  out["q"] = q;
  out["g"] = polynomial_json(poly.g);
  out["h"] = polynomial_json(poly.h);
  const auto root = largest_root(p, q);
  out["flat"] = root.flat;
  out["largest_root"] = root.x;
  out["mu"] = root.mu();
  if (q == 3 || q == 4 || q == 6) out["mu_closed_form"] = mu_closed_form(p, q);
  else out["mu_closed_form"] = nullptr;
  out["mu_lower_bound"] = mu_lower_bound(p, q);
  out["mu_tree"] = std::log(p - 1.0);

  const auto analysis = root_analysis(poly.g);
  Json roots = Json::array();
  for (const auto& z : analysis.roots) roots.push_back({z.real(), z.imag()});
  out["roots"] = std::move(roots);
  out["off_circle"] = analysis.off_circle;
  out["salem_ok"] = analysis.salem_ok;
  out["mahler"] = analysis.mahler;
  out["max_residual"] = analysis.max_residual;
  return out;
}

Json spectral_report(const PlanarGraph& g) {
  Json out = base("spectral");
  const auto params = graph_parameters(g);
  out["p"] = degree_json(params.p);
  out["q"] = degree_json(params.q);
  const auto inf = curvature_infima(g);
  out["c"] = rational_json(inf.c);

  const bool usable = valid_parameters(params.p, params.q) && inf.c > 0;
  if (usable) {
    out["mckean"] = mckean_bound(params.p, params.q, inf.c);
    // The exact geometric Cheeger constant is known for regular graphs with
    // bounded faces; otherwise the curvature lower bound stands in for it.
    double alpha_bar;
    if (params.regular && params.q != kInfinite) {
      alpha_bar = regular_closed_form(params.p, params.q).alpha_bar;
      out["alpha_bar_source"] = "closed_form";
    } else {
      alpha_bar = to_double(2 * structure_constant(params.p, params.q) * inf.c);
      out["alpha_bar_source"] = "curvature_bound";
    }
    const double mu = params.q == kInfinite ? std::log(params.p - 1.0)
                                            : largest_root(params.p, params.q).mu();
    const auto fuji = fujiwara_bounds(alpha_bar, mu);
    out["fujiwara_lower"] = fuji.lower;
    out["fujiwara_ess_upper"] = fuji.ess_upper;
  } else {
    out["mckean"] = nullptr;
    out["alpha_bar_source"] = nullptr;
    out["fujiwara_lower"] = nullptr;
    out["fujiwara_ess_upper"] = nullptr;
  }

  const auto region = g.is_ball() ? dirichlet_region(g) : std::vector<int>{};
  if (!region.empty()) {
    const auto dir = dirichlet_lambda0(VertexSet(g, region));
    out["dirichlet_lambda0"] = dir.lambda0;
    out["dirichlet_size"] = dir.size;
    out["dirichlet_residual"] = dir.residual;
  } else {
    out["dirichlet_lambda0"] = nullptr;
  }
  return out;
}

}  // namespace curvgraph
