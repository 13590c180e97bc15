#include "qsym/qsym.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "qsym/automorphism.hpp"
#include "qsym/bitstring.hpp"
#include "qsym/dataset.hpp"
#include "qsym/error.hpp"
#include "qsym/features.hpp"
#include "qsym/generators.hpp"
#include "qsym/ml.hpp"
#include "qsym/reduced.hpp"
#include "qsym/schedule.hpp"
#include "qsym/statevector.hpp"

struct qsym_graph {
  qsym::Graph graph;
};

struct qsym_group {
  qsym::PermGroup group;
};

struct qsym_model {
  qsym::PminModel model;
};

namespace {

thread_local std::string last_error;

qsym_status status_of(qsym::ErrorCategory c) {
  return static_cast<qsym_status>(static_cast<int>(c));
}

template <typename Fn>
qsym_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return QSYM_OK;
  } catch (const qsym::Error& e) {
    last_error = std::string(qsym::to_string(e.kind())) + ": " + e.what();
    return status_of(e.category());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QSYM_ERR_SIZE_LIMIT;
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return QSYM_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return QSYM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) qsym::fail(qsym::ErrorKind::invalid_params, what);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<qsym::Edge> edge_pairs(const int* edges, size_t count) {
  require(edges || count == 0, "null edge array");
  std::vector<qsym::Edge> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(edges[2 * i], edges[2 * i + 1]);
  return out;
}

qsym::Angles angles_of(const double* betas, const double* gammas, int p) {
  require(p >= 1, "depth must be at least 1");
  require(betas && gammas, "null angle array");
  qsym::Angles a;
  a.betas.assign(betas, betas + p);
  a.gammas.assign(gammas, gammas + p);
  a.validate();
  return a;
}

qsym_schedule to_c(const qsym::LinearSchedule& s) {
  return {s.p, s.beta_start, s.beta_end, s.gamma_start, s.gamma_end};
}

}  // namespace

extern "C" {

const char* qsym_version(void) { return qsym::software_version().data(); }

const char* qsym_last_error(void) { return last_error.c_str(); }

const char* qsym_status_name(qsym_status status) {
  switch (status) {
    case QSYM_OK: return "ok";
    case QSYM_ERR_INTERNAL: return "internal";
    case QSYM_ERR_INVALID_INPUT: return "invalid-input";
    case QSYM_ERR_SIZE_LIMIT: return "size-limit";
    case QSYM_ERR_VERIFICATION: return "verification";
    case QSYM_ERR_IO: return "io";
    case QSYM_ERR_BUDGET: return "budget";
    case QSYM_ERR_NUMERIC: return "numeric";
  }
  return "unknown";
}

void qsym_string_free(char* s) { std::free(s); }

qsym_status qsym_graph_create(int n, const int* edges, size_t num_edges, qsym_graph** out) {
  return guarded([&] {
    require(out, "null output");
    *out = new qsym_graph{qsym::Graph(n, edge_pairs(edges, num_edges))};
  });
}

qsym_status qsym_graph_parse(const char* text, qsym_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new qsym_graph{qsym::parse_edge_list(text)};
  });
}

qsym_status qsym_graph_read_file(const char* path, qsym_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qsym_graph{qsym::read_edge_list_file(path)};
  });
}

qsym_status qsym_graph_generate(const char* family, const int64_t* params, size_t num_params, uint64_t seed,
                                const char* label, qsym_graph** out) {
  return guarded([&] {
    require(family && out, "null argument");
    require(params || num_params == 0, "null parameter array");
    qsym::GraphFamily f{family, std::vector<std::int64_t>(params, params + num_params), seed, label ? label : ""};
    *out = new qsym_graph{qsym::generate(f)};
  });
}

qsym_status qsym_graph_delete_edges(const qsym_graph* g, const int* edges, size_t num_edges, qsym_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto removed = edge_pairs(edges, num_edges);
    *out = new qsym_graph{qsym::delete_edges(g->graph, removed)};
  });
}

void qsym_graph_free(qsym_graph* g) { delete g; }

int qsym_graph_num_vertices(const qsym_graph* g) { return g ? g->graph.num_vertices() : 0; }

size_t qsym_graph_num_edges(const qsym_graph* g) { return g ? g->graph.num_edges() : 0; }

qsym_status qsym_graph_edges(const qsym_graph* g, int* edges, size_t capacity) {
  return guarded([&] {
    require(g && edges, "null argument");
    require(capacity >= g->graph.num_edges(), "edge buffer too small");
    size_t i = 0;
    for (const auto& [u, v] : g->graph.edges()) {
      edges[i++] = u;
      edges[i++] = v;
    }
  });
}

qsym_status qsym_graph_to_text(const qsym_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup_string(qsym::serialize_edge_list(g->graph));
  });
}

qsym_status qsym_family_names(char** out_json) {
  return guarded([&] {
    require(out_json, "null output");
    *out_json = dup_string(qsym::Json(qsym::family_names()).dump());
  });
}

qsym_status qsym_handpicked_names(char** out_json) {
  return guarded([&] {
    require(out_json, "null output");
    *out_json = dup_string(qsym::Json(qsym::handpicked_names()).dump());
  });
}

qsym_status qsym_automorphisms(const qsym_graph* g, uint64_t node_budget, qsym_group** out) {
  return guarded([&] {
    require(g && out, "null argument");
    qsym::SearchOptions opt;
    if (node_budget) opt.node_budget = node_budget;
    *out = new qsym_group{qsym::automorphism_generators(g->graph, opt)};
  });
}

void qsym_group_free(qsym_group* group) { delete group; }

int qsym_group_degree(const qsym_group* group) { return group ? group->group.degree() : 0; }

size_t qsym_group_num_generators(const qsym_group* group) { return group ? group->group.generators().size() : 0; }

qsym_status qsym_group_generator(const qsym_group* group, size_t index, int* images) {
  return guarded([&] {
    require(group && images, "null argument");
    require(index < group->group.generators().size(), "generator index out of range");
    const auto& p = group->group.generators()[index];
    for (int i = 0; i < p.degree(); ++i) images[i] = p(i);
  });
}

qsym_status qsym_group_order(const qsym_group* group, char** out) {
  return guarded([&] {
    require(group && out, "null argument");
    *out = dup_string(group->group.order().str());
  });
}

double qsym_group_log_order(const qsym_group* group) { return group ? group->group.log_order() : 0.0; }

qsym_status qsym_group_vertex_orbits(const qsym_group* group, int* orbit_of, int* num_orbits) {
  return guarded([&] {
    require(group && orbit_of, "null argument");
    const auto orbits = qsym::vertex_orbits(group->group);
    for (const auto& cell : orbits.cells)
      for (int v : cell) orbit_of[v] = cell.front();
    if (num_orbits) *num_orbits = static_cast<int>(orbits.size());
  });
}

qsym_status qsym_quotient_dimension(const qsym_group* group, int include_flip, char** out_json) {
  return guarded([&] {
    require(group && out_json, "null argument");
    const int n = group->group.degree();
    const auto q = qsym::quotient_dimension(group->group, include_flip != 0, n);
    const auto [num, den] = q.inverse_orbit_sum();
    qsym::Json j;
    j["n"] = n;
    j["include_flip"] = include_flip != 0;
    j["dimension"] = q.dimension;
    j["group_order"] = q.group_order.str();
    j["stabilizer_sum"] = q.stabilizer_sum.str();
    j["burnside_evaluated"] = q.burnside_evaluated;
    j["fixed_point_sum"] = q.burnside_evaluated ? qsym::Json(q.fixed_point_sum.str()) : qsym::Json(nullptr);
    j["inverse_orbit_sum"] = num.str() + "/" + den.str();
    qsym::Json hist = qsym::Json::object();
    for (const auto& [fixed, count] : q.fixed_point_histogram) hist[std::to_string(fixed)] = count;
    j["fixed_point_histogram"] = std::move(hist);
    *out_json = dup_string(j.dump());
  });
}

const char* qsym_feature_name(int index) {
  if (index < 0 || index >= static_cast<int>(qsym::kNumFeatures)) return nullptr;
  return qsym::SymmetryFeatures::names()[static_cast<size_t>(index)].data();
}

qsym_status qsym_features(const qsym_graph* g, uint64_t seed, double* out) {
  return guarded([&] {
    require(g && out, "null argument");
    qsym::FeatureOptions opt;
    opt.seed = seed;
    const auto values = qsym::feature_vector(g->graph, opt).to_array();
    std::copy(values.begin(), values.end(), out);
  });
}

qsym_status qsym_max_cut(const qsym_graph* g, int64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = qsym::QaoaEvaluator(g->graph).max_cut();
  });
}

qsym_status qsym_expectation(const qsym_graph* g, const double* betas, const double* gammas, int p, qsym_sim_mode mode,
                             double* out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto angles = angles_of(betas, gammas, p);
    qsym::SimulationMode m = qsym::SimulationMode::automatic;
    if (mode == QSYM_SIM_FULL) {
      *out = qsym::expectation(qsym::evolve(qsym::maxcut_diagonal(g->graph), angles), qsym::maxcut_diagonal(g->graph));
      return;
    }
    if (mode == QSYM_SIM_REDUCED) m = qsym::SimulationMode::reduced;
    *out = qsym::QaoaEvaluator(g->graph, m).expectation(angles);
  });
}

qsym_status qsym_simulate(const qsym_graph* g, const double* betas, const double* gammas, int p, double* probabilities,
                          size_t capacity, double* expectation) {
  return guarded([&] {
    require(g, "null graph");
    const auto angles = angles_of(betas, gammas, p);
    const auto cost = qsym::maxcut_diagonal(g->graph);
    const auto state = qsym::evolve(cost, angles);
    if (probabilities) {
      require(capacity >= cost.size(), "probability buffer too small");
      const auto probs = qsym::probabilities(state);
      std::copy(probs.begin(), probs.end(), probabilities);
    }
    if (expectation) *expectation = qsym::expectation(state, cost);
  });
}

qsym_status qsym_probabilities_csv(const qsym_graph* g, const double* betas, const double* gammas, int p, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto angles = angles_of(betas, gammas, p);
    *out = dup_string(qsym::probabilities_csv(qsym::evolve(qsym::maxcut_diagonal(g->graph), angles)));
  });
}

qsym_status qsym_expand_schedule(const qsym_schedule* s, double* betas, double* gammas) {
  return guarded([&] {
    require(s && betas && gammas, "null argument");
    const auto a = qsym::expand({s->p, s->beta_start, s->beta_end, s->gamma_start, s->gamma_end});
    std::copy(a.betas.begin(), a.betas.end(), betas);
    std::copy(a.gammas.begin(), a.gammas.end(), gammas);
  });
}

qsym_status qsym_reduced_dimension(const qsym_graph* g, int include_flip, size_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    const int n = g->graph.num_vertices();
    const auto m = g->graph.num_edges();
    if (m == static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2 && n > qsym::kMaxGenericReducedQubits) {
      // Hamming basis of a complete graph: n + 1 weights, paired by the flip.
      *out = include_flip ? static_cast<size_t>(n / 2 + 1) : static_cast<size_t>(n + 1);
      return;
    }
    *out = qsym::build_orbit_basis(g->graph, include_flip != 0).dim();
  });
}

namespace {

qsym_status verify_impl(const qsym_graph* g, const int* extra_perm, const double* betas, const double* gammas, int p,
                        double* probability_spread, double* amplitude_spread, int* cost_commutes, int* mixer_commutes) {
  return guarded([&] {
    require(g, "null graph");
    const auto angles = angles_of(betas, gammas, p);
    const int n = g->graph.num_vertices();
    if (n > qsym::kMaxGenericReducedQubits) qsym::fail(qsym::ErrorKind::size_limit, "verification limited to n <= 16");
    const auto cost = qsym::maxcut_diagonal(g->graph);
    auto gens = qsym::automorphism_generators(g->graph).generators();
    if (extra_perm) gens.emplace_back(std::vector<int>(extra_perm, extra_perm + n));
    const qsym::PermGroup group(n, gens);
    const auto orbits = qsym::bitstring_orbits(group, true, n);
    const auto spread = qsym::orbit_spread(qsym::evolve(cost, angles), orbits);
    bool cost_ok = true, mixer_ok = true;
    std::vector<std::uint32_t> map(cost.size());
    auto check = [&] {
      const auto c = qsym::check_symmetry_conditions(map, cost);
      cost_ok = cost_ok && c.cost_commutes;
      mixer_ok = mixer_ok && c.mixer_commutes;
    };
    for (const auto& gen : group.generators()) {
      for (std::uint32_t x = 0; x < map.size(); ++x) map[x] = qsym::permute_bits(x, gen);
      check();
    }
    for (std::uint32_t x = 0; x < map.size(); ++x) map[x] = qsym::global_flip(x, n);
    check();
    if (probability_spread) *probability_spread = spread.probability;
    if (amplitude_spread) *amplitude_spread = spread.amplitude;
    if (cost_commutes) *cost_commutes = cost_ok;
    if (mixer_commutes) *mixer_commutes = mixer_ok;
  });
}

}  // namespace

qsym_status qsym_verify(const qsym_graph* g, const double* betas, const double* gammas, int p,
                        double* probability_spread, double* amplitude_spread, int* cost_commutes, int* mixer_commutes) {
  return verify_impl(g, nullptr, betas, gammas, p, probability_spread, amplitude_spread, cost_commutes, mixer_commutes);
}

qsym_status qsym_verify_permutation(const qsym_graph* g, const int* images, const double* betas, const double* gammas,
                                    int p, double* probability_spread, double* amplitude_spread, int* cost_commutes,
                                    int* mixer_commutes) {
  if (!images) return guarded([] { qsym::fail(qsym::ErrorKind::invalid_params, "null permutation"); });
  return verify_impl(g, images, betas, gammas, p, probability_spread, amplitude_spread, cost_commutes, mixer_commutes);
}

void qsym_pmin_options_default(qsym_pmin_options* options) {
  if (!options) return;
  const qsym::PminOptions d;
  *options = {d.target_ratio, d.p_start, d.p_cap, d.restarts, d.seed, d.warm_start ? 1 : 0, d.local.max_evaluations, 1};
}

qsym_status qsym_optimize_linear(const qsym_graph* g, int p, int restarts, uint64_t seed, qsym_schedule* best,
                                 double* ratio) {
  return guarded([&] {
    require(g, "null graph");
    const auto r = qsym::optimize_linear(g->graph, p, restarts, seed);
    if (best) *best = to_c(r.schedule);
    if (ratio) *ratio = r.ratio;
  });
}

qsym_status qsym_find_pmin(const qsym_graph* g, const qsym_pmin_options* options, qsym_pmin_result* result,
                           char** trace_csv) {
  return guarded([&] {
    require(g && result, "null argument");
    qsym::PminOptions opt;
    if (options) {
      opt.target_ratio = options->target_ratio;
      opt.p_start = options->p_start;
      opt.p_cap = options->p_cap;
      opt.restarts = options->restarts;
      opt.seed = options->seed;
      opt.warm_start = options->warm_start != 0;
      opt.local.max_evaluations = options->max_evaluations;
      opt.threads = options->threads ? options->threads : 1;
    }
    const auto r = qsym::find_pmin(g->graph, opt);
    result->p_min = r.p_min.value_or(-1);
    result->ratio = r.ratio_achieved;
    result->optimum_cut = r.optimum_cut;
    result->schedule = to_c(r.best_schedule);
    if (trace_csv) {
      std::ostringstream s;
      s.precision(17);
      s << "p,best_ratio,beta_start,beta_end,gamma_start,gamma_end\n";
      for (const auto& t : r.trace)
        s << t.p << ',' << t.best_ratio << ',' << t.schedule.beta_start << ',' << t.schedule.beta_end << ','
          << t.schedule.gamma_start << ',' << t.schedule.gamma_end << '\n';
      *trace_csv = dup_string(s.str());
    }
  });
}

qsym_status qsym_config_graphs(const char* config_path, char** out_json) {
  return guarded([&] {
    require(config_path && out_json, "null argument");
    const auto config = qsym::load_dataset_config(config_path);
    qsym::Json out = qsym::Json::array();
    for (const auto& spec : qsym::expand_instances(config)) {
      out.push_back({{"id", spec.id},
                     {"family", spec.family.name},
                     {"params", spec.family.params},
                     {"seed", spec.family.seed},
                     {"label", spec.family.label},
                     {"edges", qsym::serialize_edge_list(qsym::generate(spec.family))}});
    }
    *out_json = dup_string(out.dump());
  });
}

qsym_status qsym_gen_dataset(const char* config_path, const char* out_path, const qsym_dataset_overrides* overrides,
                             unsigned threads, int timing, size_t* written, size_t* total) {
  return guarded([&] {
    require(config_path && out_path, "null argument");
    auto config = qsym::load_dataset_config(config_path);
    if (overrides) {
      if (overrides->target_ratio > 0) config.pmin.target_ratio = overrides->target_ratio;
      if (overrides->p_start > 0) config.pmin.p_start = overrides->p_start;
      if (overrides->p_cap > 0) config.pmin.p_cap = overrides->p_cap;
      if (overrides->restarts > 0) config.pmin.restarts = overrides->restarts;
      if (overrides->has_seed) config.seed = overrides->seed;
      require(config.pmin.p_start <= config.pmin.p_cap, "p_start exceeds p_cap");
    }
    qsym::GenerateOptions opt;
    opt.threads = threads ? threads : 1;
    opt.timing = timing != 0;
    const auto summary = qsym::gen_dataset(config, out_path, opt);
    if (written) *written = summary.written;
    if (total) *total = summary.total;
  });
}

qsym_status qsym_train(const char* dataset_path, const char* out_dir, double test_fraction, uint64_t seed,
                       unsigned threads, char** report_text) {
  return guarded([&] {
    require(dataset_path && out_dir, "null argument");
    const auto records = qsym::read_dataset(dataset_path);
    qsym::TrainOptions opt;
    opt.split.test_fraction = test_fraction;
    opt.split.seed = seed;
    opt.threads = threads ? threads : 1;
    const auto result = qsym::train_models(records, opt);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) qsym::fail(qsym::ErrorKind::io_error, "cannot create '" + std::string(out_dir) + "'");
    const fs::path dir(out_dir);
    result.regressor.save_file((dir / "regressor.model").string());
    result.ordinal.save_file((dir / "ordinal.model").string());
    auto write = [&](const char* name, const std::string& text) {
      std::ofstream f(dir / name, std::ios::binary);
      f << text;
      if (!f) qsym::fail(qsym::ErrorKind::io_error, "cannot write '" + (dir / name).string() + "'");
    };
    const auto text = qsym::report_text(result.report);
    write("report.json", qsym::report_to_json(result.report).dump(2) + "\n");
    write("report.txt", text);
    write("scatter.csv", qsym::scatter_csv(result.report));
    if (report_text) *report_text = dup_string(text);
  });
}

qsym_status qsym_dataset_report(const char* dataset_path, char** out_text) {
  return guarded([&] {
    require(dataset_path && out_text, "null argument");
    const auto records = qsym::read_dataset(dataset_path);
    std::string text = qsym::dataset_summary(records);
    text += "\nfeature            pearson_r\n";
    char buf[96];
    for (const auto& c : qsym::feature_correlations(records)) {
      if (c.r) {
        std::snprintf(buf, sizeof buf, "%-18s %9.5f\n", c.name.c_str(), *c.r);
      } else {
        std::snprintf(buf, sizeof buf, "%-18s %9s\n", c.name.c_str(), "n/a");
      }
      text += buf;
    }
    *out_text = dup_string(text);
  });
}

qsym_status qsym_dataset_records(const char* dataset_path, char** out_json) {
  return guarded([&] {
    require(dataset_path && out_json, "null argument");
    qsym::Json out = qsym::Json::array();
    for (const auto& r : qsym::read_dataset(dataset_path)) {
      out.push_back({{"id", r.id},
                     {"family", r.family.name},
                     {"n", r.graph.num_vertices()},
                     {"p_min", r.p_min ? qsym::Json(*r.p_min) : qsym::Json(nullptr)},
                     {"features", r.features.to_array()}});
    }
    *out_json = dup_string(out.dump());
  });
}

qsym_status qsym_model_load(const char* path, qsym_model** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qsym_model{qsym::PminModel::load_file(path)};
  });
}

void qsym_model_free(qsym_model* model) { delete model; }

qsym_status qsym_model_predict(const qsym_model* model, const double* features, double* out) {
  return guarded([&] {
    require(model && features && out, "null argument");
    *out = model->model.predict(std::span<const double>(features, qsym::kNumFeatures));
  });
}

}  // extern "C"
