/* C interface to the curvgraph library.
 *
 * Every function returns a cg_status; on failure cg_last_error_message()
 * describes the problem (per thread, valid until the next failing call).
 * Strings returned through char** are owned by the caller and released with
 * cg_string_free. Face or vertex degree parameters use CG_INFINITE for an
 * unbounded value.
 */
#ifndef CURVGRAPH_H
#define CURVGRAPH_H

#include <stdint.h>

#if defined(CURVGRAPH_BUILDING_LIBRARY)
#define CG_API __attribute__((visibility("default")))
#else
#define CG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cg_graph cg_graph;
typedef int cg_status;

enum {
  CG_OK = 0,
  CG_INVALID_INPUT = 1,
  CG_LOOP_EDGE = 2,
  CG_MULTI_EDGE = 3,
  CG_LEAF = 4,
  CG_ASYMMETRIC_ADJACENCY = 5,
  CG_DISCONNECTED = 6,
  CG_INVALID_FACE = 7,
  CG_RADIUS_EXCEEDS_GRAPH = 8,
  CG_NO_INTERIOR_MARKED = 9,
  CG_EMPTY_SET = 10,
  CG_DISCONNECTED_INDUCED_SUBGRAPH = 11,
  CG_HORIZON_EXCEEDED = 12,
  CG_NOT_FACE_REGULAR = 13,
  CG_PARAMETER_OUT_OF_RANGE = 14,
  CG_RESOURCE_LIMIT = 15,
  CG_GENERATION_FAILED = 16,
  CG_NOT_A_CORNER = 17,
  CG_BOUNDARY_VERTEX = 18,
  CG_NO_INTERIOR = 19,
  CG_NONPOSITIVE_CURVATURE_GAP = 20,
  CG_NON_INTEGER_SIGMA = 21,
  CG_NON_POSITIVE_SIGMA = 22,
  CG_NO_SIGN_CHANGE = 23,
  CG_POSITIVE_CURVATURE = 24,
  CG_ROOT_FINDING_FAILURE = 25,
  CG_LENGTH_MISMATCH = 26,
  CG_DOMAIN_ERROR = 27,
  CG_BOUND_EXCEEDS_ONE = 28,
  CG_CONVERGENCE_FAILURE = 29,
  CG_IO = 30,
  CG_INTERNAL = 31
};

#define CG_INFINITE (-1)

CG_API const char* cg_last_error_message(void);
CG_API const char* cg_status_name(cg_status status);
CG_API void cg_string_free(char* s);

/* Graphs */
CG_API cg_status cg_graph_from_json(const char* json, cg_graph** out);
CG_API cg_status cg_graph_load(const char* path, cg_graph** out);
CG_API cg_status cg_graph_to_json(const cg_graph* g, char** out);
CG_API cg_status cg_graph_save(const cg_graph* g, const char* path);
CG_API void cg_graph_free(cg_graph* g);
CG_API cg_status cg_graph_counts(const cg_graph* g, int64_t* vertices, int64_t* edges,
                                 int64_t* faces);
/* sigma must hold radius + 1 entries. */
CG_API cg_status cg_graph_sigma(const cg_graph* g, int v0, int radius, int64_t* sigma);

/* Generators; the vertex budget comes from CURVGRAPH_BUDGET. */
CG_API cg_status cg_generate_tessellation(int p, int q, int radius, cg_graph** out);
CG_API cg_status cg_generate_tree(int p, int radius, cg_graph** out);

/* Curvature and constants, exact values as num/den. */
CG_API cg_status cg_vertex_curvature(const cg_graph* g, int v, int64_t* num, int64_t* den);
CG_API cg_status cg_structure_constant(int p, int q, int64_t* num, int64_t* den);
CG_API cg_status cg_mohar_bound(int p, int q, int64_t* num, int64_t* den);
CG_API cg_status cg_regular_closed_form(int p, int q, double* alpha_bar, double* alpha);

/* Growth */
CG_API cg_status cg_largest_root(int p, int q, double* x, int* flat);
CG_API cg_status cg_mu_closed_form(int p, int q, double* mu);
CG_API cg_status cg_mu_lower_bound(int p, int q, double* mu);

/* Spectral */
CG_API cg_status cg_fujiwara_bounds(double alpha_bar, double mu, double* lower,
                                    double* ess_upper);
CG_API cg_status cg_mckean_bound(int p, int q, int64_t c_num, int64_t c_den, double* out);
CG_API cg_status cg_ess_upper_regular(int p, int q, double* out);
/* Dirichlet eigenvalue on the vertices strictly inside the interior radius. */
CG_API cg_status cg_dirichlet_lambda0(const cg_graph* g, double* out);

/* JSON reports ("schema": 1). */
CG_API cg_status cg_report_graph(const cg_graph* g, char** out);
CG_API cg_status cg_report_curvature(const cg_graph* g, char** out);
CG_API cg_status cg_report_cheeger(const cg_graph* g, int max_size, char** out);
CG_API cg_status cg_report_cheeger_regular(int p, int q, char** out);
CG_API cg_status cg_report_growth(int p, int q, int n_max, char** out);
CG_API cg_status cg_report_growth_csv(int p, int q, int n_max, char** out);
CG_API cg_status cg_report_roots(int p, int q, char** out);
CG_API cg_status cg_report_spectral(const cg_graph* g, char** out);
/* config_json may be NULL for defaults; keys mirror the report's "config". */
CG_API cg_status cg_verify_all(const char* config_json, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* CURVGRAPH_H */
