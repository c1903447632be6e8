#include "curvgraph.h"

#include "curvgraph/cheeger.hpp"
#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"
#include "curvgraph/generators.hpp"
#include "curvgraph/graph_json.hpp"
#include "curvgraph/growth.hpp"
#include "curvgraph/reports.hpp"
#include "curvgraph/spectral.hpp"
#include "curvgraph/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

struct cg_graph {
  curvgraph::PlanarGraph graph;
};

namespace {

using namespace curvgraph;

thread_local std::string last_error;

int from_c(int degree) { return degree == CG_INFINITE ? kInfinite : degree; }

template <class F>
cg_status guarded(F&& body) {
  try {
    body();
    return CG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<cg_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CG_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CG_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidInput, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void split(const Rational& r, int64_t* num, int64_t* den) {
  require(num, "num");
  require(den, "den");
  const BigInt n = numerator_of(r), d = denominator_of(r);
  constexpr auto lo = std::numeric_limits<int64_t>::min();
  constexpr auto hi = std::numeric_limits<int64_t>::max();
  if (n < lo || n > hi || d > hi)
    fail(ErrorCode::InvalidInput, "rational " + to_string(r) + " does not fit in 64 bits");
  *num = n.convert_to<int64_t>();
  *den = d.convert_to<int64_t>();
}

void emit(const Json& report, char** out) {
  require(out, "out");
  *out = copy_string(report.dump());
}

void hand_out(PlanarGraph g, cg_graph** out) {
  require(out, "out");
  *out = new cg_graph{std::move(g)};
}

VerifyConfig parse_config(const char* text) {
  VerifyConfig config;
  config.budget = generation_budget();
  if (!text) return config;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::InvalidInput, "config must be a JSON object");
  auto read = [&](const char* key, auto& field) {
    if (doc.contains(key) && !doc[key].is_null()) {
      if (!doc[key].is_number_integer())
        fail(ErrorCode::InvalidInput, std::string("config key ") + key + " must be an integer");
      field = doc[key].get<std::decay_t<decltype(field)>>();
    }
  };
  read("p_min", config.p_min);
  read("p_max", config.p_max);
  read("q_min", config.q_min);
  read("q_max", config.q_max);
  read("radius", config.radius);
  read("brute_radius", config.brute_radius);
  read("brute_max_size", config.brute_max_size);
  read("subsets", config.subsets);
  read("series_terms", config.series_terms);
  read("comparison_terms", config.comparison_terms);
  read("seed", config.seed);
  read("budget", config.budget);
  return config;
}

}  // namespace

extern "C" {

const char* cg_last_error_message(void) { return last_error.c_str(); }

const char* cg_status_name(cg_status status) {
  if (status < CG_OK || status > CG_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(status)).data();  // literals, NUL-terminated
}

void cg_string_free(char* s) { std::free(s); }

cg_status cg_graph_from_json(const char* json, cg_graph** out) {
  return guarded([&] {
    require(json, "json");
    hand_out(graph_from_json(json), out);
  });
}

cg_status cg_graph_load(const char* path, cg_graph** out) {
  return guarded([&] {
    require(path, "path");
    hand_out(load_graph(path), out);
  });
}

cg_status cg_graph_to_json(const cg_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(graph_to_json(g->graph));
  });
}

cg_status cg_graph_save(const cg_graph* g, const char* path) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    save_graph(g->graph, path);
  });
}

void cg_graph_free(cg_graph* g) { delete g; }

cg_status cg_graph_counts(const cg_graph* g, int64_t* vertices, int64_t* edges, int64_t* faces) {
  return guarded([&] {
    require(g, "graph");
    if (vertices) *vertices = g->graph.vertex_count();
    if (edges) *edges = g->graph.edge_count();
    if (faces) *faces = static_cast<int64_t>(g->graph.faces().size());
  });
}

cg_status cg_graph_sigma(const cg_graph* g, int v0, int radius, int64_t* sigma) {
  return guarded([&] {
    require(g, "graph");
    require(sigma, "sigma");
    const auto layers = bfs_layers(g->graph, v0, radius);
    for (int n = 0; n <= radius; ++n) sigma[n] = layers.sigma[n];
  });
}

cg_status cg_generate_tessellation(int p, int q, int radius, cg_graph** out) {
  return guarded([&] { hand_out(regular_tessellation_ball(from_c(p), from_c(q), radius), out); });
}

cg_status cg_generate_tree(int p, int radius, cg_graph** out) {
  return guarded([&] { hand_out(regular_tree_ball(p, radius), out); });
}

cg_status cg_vertex_curvature(const cg_graph* g, int v, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(g, "graph");
    split(vertex_curvature(g->graph, v), num, den);
  });
}

cg_status cg_structure_constant(int p, int q, int64_t* num, int64_t* den) {
  return guarded([&] { split(structure_constant(from_c(p), from_c(q)), num, den); });
}

cg_status cg_mohar_bound(int p, int q, int64_t* num, int64_t* den) {
  return guarded([&] { split(mohar_bound(from_c(p), from_c(q)), num, den); });
}

cg_status cg_regular_closed_form(int p, int q, double* alpha_bar, double* alpha) {
  return guarded([&] {
    const auto closed = regular_closed_form(from_c(p), from_c(q));
    if (alpha_bar) *alpha_bar = closed.alpha_bar;
    if (alpha) *alpha = closed.alpha;
  });
}

cg_status cg_largest_root(int p, int q, double* x, int* flat) {
  return guarded([&] {
    const auto root = largest_root(from_c(p), from_c(q));
    if (x) *x = root.x;
    if (flat) *flat = root.flat ? 1 : 0;
  });
}

cg_status cg_mu_closed_form(int p, int q, double* mu) {
  return guarded([&] {
    require(mu, "mu");
    *mu = mu_closed_form(from_c(p), from_c(q));
  });
}

cg_status cg_mu_lower_bound(int p, int q, double* mu) {
  return guarded([&] {
    require(mu, "mu");
    *mu = mu_lower_bound(from_c(p), from_c(q));
  });
}

cg_status cg_fujiwara_bounds(double alpha_bar, double mu, double* lower, double* ess_upper) {
  return guarded([&] {
    const auto b = fujiwara_bounds(alpha_bar, mu);
    if (lower) *lower = b.lower;
    if (ess_upper) *ess_upper = b.ess_upper;
  });
}

cg_status cg_mckean_bound(int p, int q, int64_t c_num, int64_t c_den, double* out) {
  return guarded([&] {
    require(out, "out");
    if (c_den == 0) fail(ErrorCode::InvalidInput, "zero denominator");
    *out = mckean_bound(from_c(p), from_c(q), make_rational(c_num, c_den));
  });
}

cg_status cg_ess_upper_regular(int p, int q, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ess_upper_regular(from_c(p), from_c(q));
  });
}

cg_status cg_dirichlet_lambda0(const cg_graph* g, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dirichlet_lambda0(VertexSet(g->graph, dirichlet_region(g->graph))).lambda0;
  });
}

cg_status cg_report_graph(const cg_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(graph_summary(g->graph), out);
  });
}

cg_status cg_report_curvature(const cg_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(curvature_report(g->graph), out);
  });
}

cg_status cg_report_cheeger(const cg_graph* g, int max_size, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(cheeger_graph_report(g->graph, max_size), out);
  });
}

cg_status cg_report_cheeger_regular(int p, int q, char** out) {
  return guarded([&] { emit(cheeger_regular_report(from_c(p), from_c(q)), out); });
}

cg_status cg_report_growth(int p, int q, int n_max, char** out) {
  return guarded([&] { emit(growth_report(from_c(p), from_c(q), n_max), out); });
}

cg_status cg_report_growth_csv(int p, int q, int n_max, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(growth_csv(from_c(p), from_c(q), n_max));
  });
}

cg_status cg_report_roots(int p, int q, char** out) {
  return guarded([&] { emit(roots_report(from_c(p), from_c(q)), out); });
}

cg_status cg_report_spectral(const cg_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(spectral_report(g->graph), out);
  });
}

cg_status cg_verify_all(const char* config_json, char** out, int* all_pass) {
  return guarded([&] {
    const Json report = verify_all(parse_config(config_json));
    if (all_pass) *all_pass = report["all_pass"].get<bool>() ? 1 : 0;
    emit(report, out);
  });
}

}  // extern "C"
