#ifndef QSYM_QSYM_H
#define QSYM_QSYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QSYM_BUILDING_LIBRARY)
#    define QSYM_API __declspec(dllexport)
#  else
#    define QSYM_API __declspec(dllimport)
#  endif
#else
#  define QSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 2, 3 and 4 double as CLI exit codes. */
typedef enum qsym_status {
  QSYM_OK = 0,
  QSYM_ERR_INTERNAL = 1,
  QSYM_ERR_INVALID_INPUT = 2,
  QSYM_ERR_SIZE_LIMIT = 3,
  QSYM_ERR_VERIFICATION = 4,
  QSYM_ERR_IO = 5,
  QSYM_ERR_BUDGET = 6,
  QSYM_ERR_NUMERIC = 7
} qsym_status;

typedef struct qsym_graph qsym_graph;
typedef struct qsym_group qsym_group;
typedef struct qsym_model qsym_model;

#define QSYM_NUM_FEATURES 10

typedef enum qsym_sim_mode { QSYM_SIM_AUTO = 0, QSYM_SIM_FULL = 1, QSYM_SIM_REDUCED = 2 } qsym_sim_mode;

typedef struct qsym_schedule {
  int p;
  double beta_start;
  double beta_end;
  double gamma_start;
  double gamma_end;
} qsym_schedule;

typedef struct qsym_pmin_options {
  double target_ratio;
  int p_start;
  int p_cap;
  int restarts;
  uint64_t seed;
  int warm_start;
  int max_evaluations;
  unsigned threads;
} qsym_pmin_options;

typedef struct qsym_pmin_result {
  int p_min; /* -1 when censored */
  double ratio;
  int64_t optimum_cut;
  qsym_schedule schedule;
} qsym_pmin_result;

/* Overrides for dataset generation; negative / zero fields keep the
   config value. */
typedef struct qsym_dataset_overrides {
  double target_ratio;
  int p_start;
  int p_cap;
  int restarts;
  int has_seed;
  uint64_t seed;
} qsym_dataset_overrides;

/* Library */
QSYM_API const char* qsym_version(void);
/* Message for the last failed call on this thread ("" if none). */
QSYM_API const char* qsym_last_error(void);
QSYM_API const char* qsym_status_name(qsym_status status);
/* Frees strings returned through char** out-parameters. */
QSYM_API void qsym_string_free(char* s);

/* Graphs. Edge arrays are flat (u0, v0, u1, v1, ...). */
QSYM_API qsym_status qsym_graph_create(int n, const int* edges, size_t num_edges, qsym_graph** out);
QSYM_API qsym_status qsym_graph_parse(const char* text, qsym_graph** out);
QSYM_API qsym_status qsym_graph_read_file(const char* path, qsym_graph** out);
QSYM_API qsym_status qsym_graph_generate(const char* family, const int64_t* params, size_t num_params, uint64_t seed,
                                         const char* label, qsym_graph** out);
QSYM_API qsym_status qsym_graph_delete_edges(const qsym_graph* g, const int* edges, size_t num_edges, qsym_graph** out);
QSYM_API void qsym_graph_free(qsym_graph* g);
QSYM_API int qsym_graph_num_vertices(const qsym_graph* g);
QSYM_API size_t qsym_graph_num_edges(const qsym_graph* g);
QSYM_API qsym_status qsym_graph_edges(const qsym_graph* g, int* edges, size_t capacity);
QSYM_API qsym_status qsym_graph_to_text(const qsym_graph* g, char** out);
/* JSON array of family names / bundled graph names. */
QSYM_API qsym_status qsym_family_names(char** out_json);
QSYM_API qsym_status qsym_handpicked_names(char** out_json);

/* Automorphisms. node_budget 0 uses the default. */
QSYM_API qsym_status qsym_automorphisms(const qsym_graph* g, uint64_t node_budget, qsym_group** out);
QSYM_API void qsym_group_free(qsym_group* group);
QSYM_API int qsym_group_degree(const qsym_group* group);
QSYM_API size_t qsym_group_num_generators(const qsym_group* group);
QSYM_API qsym_status qsym_group_generator(const qsym_group* group, size_t index, int* images);
/* Exact order as a decimal string. */
QSYM_API qsym_status qsym_group_order(const qsym_group* group, char** out);
QSYM_API double qsym_group_log_order(const qsym_group* group);
/* orbit_of[v] = smallest vertex in the orbit of v; returns orbit count. */
QSYM_API qsym_status qsym_group_vertex_orbits(const qsym_group* group, int* orbit_of, int* num_orbits);
/* Quotient dimension with the three counting routes, as JSON. */
QSYM_API qsym_status qsym_quotient_dimension(const qsym_group* group, int include_flip, char** out_json);

/* Features (10 values in record order; see qsym_feature_name). */
QSYM_API const char* qsym_feature_name(int index);
QSYM_API qsym_status qsym_features(const qsym_graph* g, uint64_t seed, double* out);

/* Simulation. betas/gammas have p entries. */
QSYM_API qsym_status qsym_max_cut(const qsym_graph* g, int64_t* out);
QSYM_API qsym_status qsym_expectation(const qsym_graph* g, const double* betas, const double* gammas, int p,
                                      qsym_sim_mode mode, double* out);
/* probabilities may be NULL; otherwise it needs 2^n entries. */
QSYM_API qsym_status qsym_simulate(const qsym_graph* g, const double* betas, const double* gammas, int p,
                                   double* probabilities, size_t capacity, double* expectation);
QSYM_API qsym_status qsym_probabilities_csv(const qsym_graph* g, const double* betas, const double* gammas, int p,
                                            char** out);
QSYM_API qsym_status qsym_expand_schedule(const qsym_schedule* s, double* betas, double* gammas);
/* Orbit-basis dimension of the reduced simulation. */
QSYM_API qsym_status qsym_reduced_dimension(const qsym_graph* g, int include_flip, size_t* out);
/* Within-orbit probability and amplitude spreads of the evolved state
   under Aut(G) with the global flip, plus commutation checks for every
   generator. */
QSYM_API qsym_status qsym_verify(const qsym_graph* g, const double* betas, const double* gammas, int p,
                                 double* probability_spread, double* amplitude_spread, int* cost_commutes,
                                 int* mixer_commutes);
/* As qsym_verify, with the vertex permutation `images` (n entries) added to
   the generators. A permutation that is not a graph symmetry fails the
   cost check. */
QSYM_API qsym_status qsym_verify_permutation(const qsym_graph* g, const int* images, const double* betas,
                                             const double* gammas, int p, double* probability_spread,
                                             double* amplitude_spread, int* cost_commutes, int* mixer_commutes);

/* Schedules */
QSYM_API void qsym_pmin_options_default(qsym_pmin_options* options);
QSYM_API qsym_status qsym_optimize_linear(const qsym_graph* g, int p, int restarts, uint64_t seed, qsym_schedule* best,
                                          double* ratio);
/* trace_csv may be NULL. */
QSYM_API qsym_status qsym_find_pmin(const qsym_graph* g, const qsym_pmin_options* options, qsym_pmin_result* result,
                                    char** trace_csv);

/* Data pipeline */
/* JSON array of {"id", "family", "params", "seed", "label", "edges"}. */
QSYM_API qsym_status qsym_config_graphs(const char* config_path, char** out_json);
QSYM_API qsym_status qsym_gen_dataset(const char* config_path, const char* out_path,
                                      const qsym_dataset_overrides* overrides, unsigned threads, int timing,
                                      size_t* written, size_t* total);
/* Writes regressor.model, ordinal.model, report.json, report.txt and
   scatter.csv into out_dir. */
QSYM_API qsym_status qsym_train(const char* dataset_path, const char* out_dir, double test_fraction, uint64_t seed,
                                unsigned threads, char** report_text);
QSYM_API qsym_status qsym_dataset_report(const char* dataset_path, char** out_text);
/* JSON array of {"id", "family", "n", "p_min", "features"}. */
QSYM_API qsym_status qsym_dataset_records(const char* dataset_path, char** out_json);

/* Models */
QSYM_API qsym_status qsym_model_load(const char* path, qsym_model** out);
QSYM_API void qsym_model_free(qsym_model* model);
QSYM_API qsym_status qsym_model_predict(const qsym_model* model, const double* features, double* out);

#ifdef __cplusplus
}
#endif

#endif
