// qsym command-line front end. Talks to the library only through qsym.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/qsym.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr double kSpreadTolerance = 1e-8;

struct Globals {
  uint64_t seed = 0;
  unsigned threads = 1;
  double target_ratio = 0.95;
  int p_start = 2;
  int p_cap = 25;
  int restarts = 50;
};

/// Carries a library status to main().
struct Failure {
  qsym_status status;
  std::string message;
};

int exit_code(qsym_status s) {
  switch (s) {
    case QSYM_OK: return 0;
    case QSYM_ERR_INVALID_INPUT:
    case QSYM_ERR_IO: return 2;
    case QSYM_ERR_SIZE_LIMIT:
    case QSYM_ERR_BUDGET: return 3;
    case QSYM_ERR_VERIFICATION: return 4;
    default: return 1;
  }
}

void check(qsym_status s) {
  if (s != QSYM_OK) throw Failure{s, qsym_last_error()};
}

struct GraphDeleter {
  void operator()(qsym_graph* g) const { qsym_graph_free(g); }
};
struct GroupDeleter {
  void operator()(qsym_group* g) const { qsym_group_free(g); }
};
struct ModelDeleter {
  void operator()(qsym_model* m) const { qsym_model_free(m); }
};
using GraphPtr = std::unique_ptr<qsym_graph, GraphDeleter>;
using GroupPtr = std::unique_ptr<qsym_group, GroupDeleter>;
using ModelPtr = std::unique_ptr<qsym_model, ModelDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  qsym_string_free(s);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

/// A path to an edge-list file, "-" for stdin, or family:params[:seed]
/// (e.g. complete:8, grid2d:3,4, hand-picked:petersen).
GraphPtr load_graph(const std::string& spec) {
  qsym_graph* g = nullptr;
  if (spec == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(qsym_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
  }
  if (std::filesystem::exists(spec) || spec.find(':') == std::string::npos) {
    check(qsym_graph_read_file(spec.c_str(), &g));
    return GraphPtr(g);
  }
  const auto parts = split(spec, ':');
  const std::string& family = parts[0];
  std::vector<int64_t> params;
  std::string label;
  uint64_t seed = 0;
  if (family == "hand-picked") {
    label = parts.size() > 1 ? parts[1] : "";
  } else if (parts.size() > 1) {
    for (const auto& p : split(parts[1], ',')) {
      try {
        params.push_back(std::stoll(p));
      } catch (const std::exception&) {
        throw Failure{QSYM_ERR_INVALID_INPUT, "bad graph parameter '" + p + "'"};
      }
    }
  }
  if (parts.size() > 2) {
    try {
      seed = std::stoull(parts[2]);
    } catch (const std::exception&) {
      throw Failure{QSYM_ERR_INVALID_INPUT, "bad graph seed '" + parts[2] + "'"};
    }
  }
  check(qsym_graph_generate(family.c_str(), params.data(), params.size(), seed, label.c_str(), &g));
  return GraphPtr(g);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Failure{QSYM_ERR_IO, "cannot write '" + path + "'"};
}

Json schedule_json(const qsym_schedule& s) {
  return Json{{"p", s.p},
              {"beta_start", s.beta_start},
              {"beta_end", s.beta_end},
              {"gamma_start", s.gamma_start},
              {"gamma_end", s.gamma_end}};
}

/// Angles from --schedule "p,bs,be,gs,ge" or from --betas/--gammas.
void resolve_angles(const std::vector<double>& schedule, std::vector<double>& betas, std::vector<double>& gammas) {
  if (!schedule.empty()) {
    if (schedule.size() != 5 || schedule[0] < 1 || schedule[0] != std::floor(schedule[0]))
      throw Failure{QSYM_ERR_INVALID_INPUT, "--schedule expects p,beta_start,beta_end,gamma_start,gamma_end"};
    const qsym_schedule s{static_cast<int>(schedule[0]), schedule[1], schedule[2], schedule[3], schedule[4]};
    betas.resize(static_cast<size_t>(s.p));
    gammas.resize(static_cast<size_t>(s.p));
    check(qsym_expand_schedule(&s, betas.data(), gammas.data()));
    return;
  }
  if (betas.empty() || betas.size() != gammas.size())
    throw Failure{QSYM_ERR_INVALID_INPUT, "give --schedule, or --betas and --gammas of equal length"};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry features, QAOA simulation and p_min prediction for MaxCut"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qsym_version()));
  Globals g;
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  auto* target_opt = app.add_option("--target-ratio", g.target_ratio, "Approximation ratio target")->capture_default_str();
  auto* p_start_opt = app.add_option("--p-start", g.p_start, "First depth tried")->capture_default_str();
  auto* p_cap_opt = app.add_option("--p-cap", g.p_cap, "Largest depth tried")->capture_default_str();
  auto* restarts_opt = app.add_option("--restarts", g.restarts, "Optimizer restarts per depth")->capture_default_str();
  auto* seed_opt = app.get_option("--seed");
  app.fallthrough();

  // gen-graphs
  auto* gen_graphs = app.add_subcommand("gen-graphs", "Write graphs of a family or of a dataset config");
  std::string family, label, out, config, out_dir;
  std::vector<int64_t> params;
  gen_graphs->add_option("--family", family, "Family name");
  gen_graphs->add_option("--params", params, "Family parameters")->delimiter(',');
  gen_graphs->add_option("--label", label, "Hand-picked name or custom path");
  gen_graphs->add_option("--config", config, "Dataset config; writes every instance")->check(CLI::ExistingFile);
  gen_graphs->add_option("--out", out, "Output file (default stdout)");
  gen_graphs->add_option("--out-dir", out_dir, "Output directory for --config");
  bool list_families = false;
  gen_graphs->add_flag("--list", list_families, "List family and hand-picked names");

  // single-instance verbs
  std::string graph_spec;
  bool as_json = false;
  auto* features = app.add_subcommand("features", "Compute the ten symmetry features");
  features->add_option("graph", graph_spec, "Edge-list file, '-' or family:params")->required();
  features->add_flag("--json", as_json, "Machine-readable output");

  auto* pmin = app.add_subcommand("pmin", "Smallest depth reaching the target ratio");
  std::string trace_path;
  int max_evals = 500;
  bool no_warm = false;
  pmin->add_option("graph", graph_spec, "Edge-list file, '-' or family:params")->required();
  pmin->add_option("--trace", trace_path, "Write the per-depth trace as CSV");
  pmin->add_option("--max-evals", max_evals, "Nelder-Mead evaluation cap")->capture_default_str();
  pmin->add_flag("--no-warm-start", no_warm, "Do not seed each depth with the previous optimum");
  pmin->add_flag("--json", as_json, "Machine-readable output");

  auto* simulate = app.add_subcommand("simulate", "Evolve a schedule and report <C>");
  std::vector<double> schedule, betas, gammas;
  std::string probs_path, mode_name = "auto";
  simulate->add_option("graph", graph_spec, "Edge-list file, '-' or family:params")->required();
  simulate->add_option("--schedule", schedule, "p,beta_start,beta_end,gamma_start,gamma_end")->delimiter(',');
  simulate->add_option("--betas", betas, "Per-layer betas")->delimiter(',');
  simulate->add_option("--gammas", gammas, "Per-layer gammas")->delimiter(',');
  simulate->add_option("--probs", probs_path, "Write bitstring probabilities as CSV");
  simulate->add_option("--mode", mode_name, "auto, full or reduced")
      ->check(CLI::IsMember({"auto", "full", "reduced"}))
      ->capture_default_str();
  simulate->add_flag("--json", as_json, "Machine-readable output");

  auto* reduce = app.add_subcommand("reduce", "Orbit counts of the reduced simulation");
  reduce->add_option("graph", graph_spec, "Edge-list file, '-' or family:params")->required();
  reduce->add_flag("--json", as_json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Check orbit invariance of the evolved state");
  int verify_p = 3;
  verify->add_option("graph", graph_spec, "Edge-list file, '-' or family:params")->required();
  verify->add_option("--p", verify_p, "Depth of the random schedule")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--schedule", schedule, "p,beta_start,beta_end,gamma_start,gamma_end")->delimiter(',');
  verify->add_option("--betas", betas, "Per-layer betas")->delimiter(',');
  verify->add_option("--gammas", gammas, "Per-layer gammas")->delimiter(',');
  std::vector<int> verify_perm;
  verify->add_option("--perm", verify_perm, "Candidate vertex permutation (images, comma separated) to check as well")
      ->delimiter(',');
  verify->add_flag("--json", as_json, "Machine-readable output");

  // data verbs
  auto* gen_dataset = app.add_subcommand("gen-dataset", "Generate (or resume) a JSONL dataset");
  bool timing = false;
  gen_dataset->add_option("--config", config, "Dataset config")->required()->check(CLI::ExistingFile);
  gen_dataset->add_option("--out", out, "JSONL output")->required();
  gen_dataset->add_flag("--timing", timing, "Record per-instance wall times");

  auto* train = app.add_subcommand("train", "Train both predictors and write a report");
  std::string dataset;
  double test_fraction = 0.30;
  train->add_option("--dataset", dataset, "JSONL dataset")->required();
  train->add_option("--out-dir", out_dir, "Output directory")->required();
  train->add_option("--test-fraction", test_fraction, "Held-out fraction")->capture_default_str()->check(CLI::Range(0.0, 1.0));

  auto* predict = app.add_subcommand("predict", "Predict p_min with a saved model");
  std::string model_path;
  std::vector<std::string> graphs;
  predict->add_option("--model", model_path, "Model file")->required();
  predict->add_option("graphs", graphs, "Edge-list files or family:params");
  predict->add_option("--dataset", dataset, "Predict every record of a dataset");
  predict->add_option("--out", out, "Output CSV (default stdout)");

  auto* report = app.add_subcommand("report", "Summarize a dataset");
  report->add_option("--dataset", dataset, "JSONL dataset")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_graphs) {
      if (list_families) {
        std::cout << take([] { char* s = nullptr; check(qsym_family_names(&s)); return s; }()) << '\n'
                  << take([] { char* s = nullptr; check(qsym_handpicked_names(&s)); return s; }()) << '\n';
      } else if (!config.empty()) {
        char* s = nullptr;
        check(qsym_config_graphs(config.c_str(), &s));
        const auto items = Json::parse(take(s));
        if (out_dir.empty()) throw Failure{QSYM_ERR_INVALID_INPUT, "--config needs --out-dir"};
        std::filesystem::create_directories(out_dir);
        for (const auto& item : items) {
          auto name = item["id"].get<std::string>();
          for (auto& c : name)
            if (c == ':' || c == '/') c = '_';
          write_file((std::filesystem::path(out_dir) / (name + ".edges")).string(),
                     "# " + item["id"].get<std::string>() + "\n" + item["edges"].get<std::string>());
        }
        std::cout << "wrote " << items.size() << " graphs to " << out_dir << '\n';
      } else {
        if (family.empty()) throw Failure{QSYM_ERR_INVALID_INPUT, "give --family, --config or --list"};
        qsym_graph* raw = nullptr;
        check(qsym_graph_generate(family.c_str(), params.data(), params.size(), g.seed, label.c_str(), &raw));
        GraphPtr graph(raw);
        char* s = nullptr;
        check(qsym_graph_to_text(graph.get(), &s));
        const auto text = take(s);
        if (out.empty()) {
          std::cout << text;
        } else {
          write_file(out, text);
        }
      }
    } else if (*features) {
      const auto graph = load_graph(graph_spec);
      double values[QSYM_NUM_FEATURES];
      check(qsym_features(graph.get(), g.seed, values));
      Json j;
      for (int i = 0; i < QSYM_NUM_FEATURES; ++i) j[qsym_feature_name(i)] = values[i];
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        for (int i = 0; i < QSYM_NUM_FEATURES; ++i) std::printf("%-14s %.6f\n", qsym_feature_name(i), values[i]);
      }
    } else if (*pmin) {
      const auto graph = load_graph(graph_spec);
      qsym_pmin_options opt;
      qsym_pmin_options_default(&opt);
      opt.target_ratio = g.target_ratio;
      opt.p_start = g.p_start;
      opt.p_cap = g.p_cap;
      opt.restarts = g.restarts;
      opt.seed = g.seed;
      opt.threads = g.threads;
      opt.max_evaluations = max_evals;
      opt.warm_start = no_warm ? 0 : 1;
      qsym_pmin_result r;
      char* trace = nullptr;
      check(qsym_find_pmin(graph.get(), &opt, &r, &trace));
      const auto trace_text = take(trace);
      if (!trace_path.empty()) write_file(trace_path, trace_text);
      if (as_json) {
        Json j{{"p_min", r.p_min >= 0 ? Json(r.p_min) : Json(nullptr)},
               {"censored", r.p_min < 0},
               {"ratio", r.ratio},
               {"optimum_cut", r.optimum_cut},
               {"schedule", schedule_json(r.schedule)}};
        std::cout << j.dump() << '\n';
      } else {
        if (r.p_min >= 0) {
          std::printf("p_min %d\n", r.p_min);
        } else {
          std::printf("p_min censored (> %d)\n", g.p_cap);
        }
        std::printf("ratio %.6f\noptimum_cut %lld\nschedule p=%d beta %.6f..%.6f gamma %.6f..%.6f\n", r.ratio,
                    static_cast<long long>(r.optimum_cut), r.schedule.p, r.schedule.beta_start, r.schedule.beta_end,
                    r.schedule.gamma_start, r.schedule.gamma_end);
      }
    } else if (*simulate) {
      const auto graph = load_graph(graph_spec);
      resolve_angles(schedule, betas, gammas);
      const int p = static_cast<int>(betas.size());
      const qsym_sim_mode mode = mode_name == "full" ? QSYM_SIM_FULL : mode_name == "reduced" ? QSYM_SIM_REDUCED : QSYM_SIM_AUTO;
      double e = 0;
      int64_t cut = 0;
      check(qsym_expectation(graph.get(), betas.data(), gammas.data(), p, mode, &e));
      check(qsym_max_cut(graph.get(), &cut));
      if (!probs_path.empty()) {
        char* csv = nullptr;
        check(qsym_probabilities_csv(graph.get(), betas.data(), gammas.data(), p, &csv));
        write_file(probs_path, take(csv));
      }
      if (as_json) {
        std::cout << Json{{"expectation", e}, {"optimum_cut", cut}, {"ratio", e / static_cast<double>(cut)}}.dump() << '\n';
      } else {
        std::printf("expectation %.12f\noptimum_cut %lld\nratio %.12f\n", e, static_cast<long long>(cut), e / static_cast<double>(cut));
      }
    } else if (*reduce) {
      const auto graph = load_graph(graph_spec);
      const int n = qsym_graph_num_vertices(graph.get());
      qsym_group* raw = nullptr;
      check(qsym_automorphisms(graph.get(), 0, &raw));
      GroupPtr group(raw);
      char* order = nullptr;
      check(qsym_group_order(group.get(), &order));
      Json j{{"n", n}, {"aut_order", take(order)}, {"log_aut", qsym_group_log_order(group.get())}};
      for (int flip = 0; flip < 2; ++flip) {
        const char* key = flip ? "flip_on" : "flip_off";
        char* q = nullptr;
        const auto s = qsym_quotient_dimension(group.get(), flip, &q);
        if (s == QSYM_OK) {
          j[key] = Json::parse(take(q));
          continue;
        }
        if (s != QSYM_ERR_SIZE_LIMIT) check(s);
        size_t dim = 0;
        check(qsym_reduced_dimension(graph.get(), flip, &dim));
        j[key] = Json{{"dimension", dim}};
      }
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "n " << n << "\n|Aut| " << j["aut_order"].get<std::string>() << "\ndim (flip off) "
                  << j["flip_off"]["dimension"] << "\ndim (flip on) " << j["flip_on"]["dimension"] << '\n';
        if (j["flip_on"].contains("stabilizer_sum"))
          std::cout << "burnside (flip on): stabilizer sum " << j["flip_on"]["stabilizer_sum"].get<std::string>()
                    << ", inverse orbit sum " << j["flip_on"]["inverse_orbit_sum"].get<std::string>() << '\n';
      }
    } else if (*verify) {
      const auto graph = load_graph(graph_spec);
      if (schedule.empty() && betas.empty()) {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> beta(0.0, std::numbers::pi), gamma(0.0, 2 * std::numbers::pi);
        for (int i = 0; i < verify_p; ++i) {
          betas.push_back(beta(rng));
          gammas.push_back(gamma(rng));
        }
      } else {
        resolve_angles(schedule, betas, gammas);
      }
      double ps = 0, as = 0;
      int cost_ok = 0, mixer_ok = 0;
      if (verify_perm.empty()) {
        check(qsym_verify(graph.get(), betas.data(), gammas.data(), static_cast<int>(betas.size()), &ps, &as, &cost_ok,
                          &mixer_ok));
      } else {
        if (static_cast<int>(verify_perm.size()) != qsym_graph_num_vertices(graph.get())) {
          std::cerr << "error: --perm needs one image per vertex\n";
          return 2;
        }
        check(qsym_verify_permutation(graph.get(), verify_perm.data(), betas.data(), gammas.data(),
                                      static_cast<int>(betas.size()), &ps, &as, &cost_ok, &mixer_ok));
      }
      const bool ok = ps <= kSpreadTolerance && as <= kSpreadTolerance && cost_ok && mixer_ok;
      if (as_json) {
        std::cout << Json{{"probability_spread", ps},
                          {"amplitude_spread", as},
                          {"cost_commutes", cost_ok != 0},
                          {"mixer_commutes", mixer_ok != 0},
                          {"ok", ok}}
                         .dump()
                  << '\n';
      } else {
        std::printf("probability spread %.3e\namplitude spread %.3e\ncost commutes %s\nmixer commutes %s\n%s\n", ps, as,
                    cost_ok ? "yes" : "no", mixer_ok ? "yes" : "no", ok ? "ok" : "FAILED");
      }
      if (!ok) return 4;
    } else if (*gen_dataset) {
      qsym_dataset_overrides o{0, 0, 0, 0, 0, 0};
      if (target_opt->count()) o.target_ratio = g.target_ratio;
      if (p_start_opt->count()) o.p_start = g.p_start;
      if (p_cap_opt->count()) o.p_cap = g.p_cap;
      if (restarts_opt->count()) o.restarts = g.restarts;
      if (seed_opt->count()) {
        o.has_seed = 1;
        o.seed = g.seed;
      }
      size_t written = 0, total = 0;
      check(qsym_gen_dataset(config.c_str(), out.c_str(), &o, g.threads, timing ? 1 : 0, &written, &total));
      std::cout << "wrote " << written << " new records (" << total << " instances) to " << out << '\n';
    } else if (*train) {
      char* text = nullptr;
      check(qsym_train(dataset.c_str(), out_dir.c_str(), test_fraction, g.seed, g.threads, &text));
      std::cout << take(text);
    } else if (*predict) {
      qsym_model* raw = nullptr;
      check(qsym_model_load(model_path.c_str(), &raw));
      ModelPtr model(raw);
      std::ostringstream csv;
      csv << "id,prediction\n";
      double values[QSYM_NUM_FEATURES];
      if (!dataset.empty()) {
        char* s = nullptr;
        check(qsym_dataset_records(dataset.c_str(), &s));
        for (const auto& r : Json::parse(take(s))) {
          const auto f = r["features"].get<std::vector<double>>();
          double y = 0;
          check(qsym_model_predict(model.get(), f.data(), &y));
          csv << r["id"].get<std::string>() << ',' << fmt(y) << '\n';
        }
      }
      for (const auto& spec : graphs) {
        const auto graph = load_graph(spec);
        check(qsym_features(graph.get(), g.seed, values));
        double y = 0;
        check(qsym_model_predict(model.get(), values, &y));
        csv << spec << ',' << fmt(y) << '\n';
      }
      if (dataset.empty() && graphs.empty()) throw Failure{QSYM_ERR_INVALID_INPUT, "give graphs or --dataset"};
      if (out.empty()) {
        std::cout << csv.str();
      } else {
        write_file(out, csv.str());
      }
    } else if (*report) {
      char* s = nullptr;
      check(qsym_dataset_report(dataset.c_str(), &s));
      std::cout << take(s);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
