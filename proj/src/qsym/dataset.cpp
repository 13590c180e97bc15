#include "qsym/dataset.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "qsym/error.hpp"
#include "qsym/parallel.hpp"
#include "qsym/rng.hpp"

#ifndef QSYM_VERSION
#define QSYM_VERSION "0.0.0"
#endif

namespace qsym {

std::string_view software_version() { return QSYM_VERSION; }

namespace {

constexpr std::uint64_t kPminSalt = 0x706d696eULL;
constexpr std::uint64_t kFeatureSalt = 0x66656174ULL;

bool is_seeded_family(std::string_view name) { return name == "random-regular" || name == "trivial-aut"; }

Json schedule_json(const LinearSchedule& s) {
  return Json{{"p", s.p},
              {"beta_start", s.beta_start},
              {"beta_end", s.beta_end},
              {"gamma_start", s.gamma_start},
              {"gamma_end", s.gamma_end}};
}

LinearSchedule schedule_from(const Json& j) {
  return {j.at("p").get<int>(), j.at("beta_start").get<double>(), j.at("beta_end").get<double>(),
          j.at("gamma_start").get<double>(), j.at("gamma_end").get<double>()};
}

}  // namespace

Json to_json(const InstanceRecord& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = r.id;
  j["family"] = Json{{"name", r.family.name}, {"params", r.family.params}, {"seed", r.family.seed}, {"label", r.family.label}};
  j["n"] = r.graph.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : r.graph.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  j["optimum_cut"] = r.optimum_cut;
  Json features = Json::object();
  const auto values = r.features.to_array();
  const auto& names = SymmetryFeatures::names();
  for (std::size_t i = 0; i < kNumFeatures; ++i) features[std::string(names[i])] = values[i];
  j["features"] = std::move(features);
  j["p_min"] = r.p_min ? Json(*r.p_min) : Json(nullptr);
  j["censored"] = r.censored();
  j["ratio_achieved"] = r.ratio_achieved;
  j["best_schedule"] = schedule_json(r.best_schedule);
  j["trace"] = r.trace;
  j["target_ratio"] = r.target_ratio;
  j["p_start"] = r.p_start;
  j["p_cap"] = r.p_cap;
  j["restarts"] = r.restarts;
  j["software_version"] = r.software_version;
  if (r.timing) j["timing"] = Json{{"features_seconds", r.timing->features_seconds}, {"pmin_seconds", r.timing->pmin_seconds}};
  return j;
}

InstanceRecord record_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      fail(ErrorKind::parse_error, "unsupported schema_version " + j.at("schema_version").dump());
    InstanceRecord r;
    r.id = j.at("id").get<std::string>();
    const auto& f = j.at("family");
    r.family.name = f.at("name").get<std::string>();
    r.family.params = f.at("params").get<std::vector<std::int64_t>>();
    r.family.seed = f.at("seed").get<std::uint64_t>();
    r.family.label = f.at("label").get<std::string>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    r.graph = Graph(j.at("n").get<int>(), std::move(edges));
    r.optimum_cut = j.at("optimum_cut").get<std::int64_t>();
    std::array<double, kNumFeatures> values{};
    const auto& names = SymmetryFeatures::names();
    for (std::size_t i = 0; i < kNumFeatures; ++i) values[i] = j.at("features").at(std::string(names[i])).get<double>();
    r.features = SymmetryFeatures::from_array(values);
    if (!j.at("p_min").is_null()) r.p_min = j.at("p_min").get<int>();
    if (j.at("censored").get<bool>() != r.censored()) fail(ErrorKind::parse_error, "censored flag disagrees with p_min");
    r.ratio_achieved = j.at("ratio_achieved").get<double>();
    r.best_schedule = schedule_from(j.at("best_schedule"));
    r.trace = j.at("trace").get<std::vector<double>>();
    r.target_ratio = j.at("target_ratio").get<double>();
    r.p_start = j.at("p_start").get<int>();
    r.p_cap = j.at("p_cap").get<int>();
    r.restarts = j.at("restarts").get<int>();
    r.software_version = j.at("software_version").get<std::string>();
    if (j.contains("timing"))
      r.timing = InstanceTiming{j["timing"].at("features_seconds").get<double>(), j["timing"].at("pmin_seconds").get<double>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("bad record: ") + e.what());
  }
}

std::string serialize_record(const InstanceRecord& r) { return to_json(r).dump(); }

InstanceRecord parse_record(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("bad JSON line: ") + e.what());
  }
  return record_from_json(j);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io_error, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Complete lines of a JSONL file; a trailing fragment without newline is
/// reported through `partial`.
std::vector<std::string_view> split_lines(std::string_view text, bool& partial) {
  std::vector<std::string_view> lines;
  partial = false;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      partial = true;
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

std::vector<InstanceRecord> read_dataset(const std::string& path) {
  const auto text = read_file(path);
  bool partial = false;
  const auto lines = split_lines(text, partial);
  std::vector<InstanceRecord> records;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    try {
      records.push_back(parse_record(lines[i]));
    } catch (const Error&) {
      if (partial && i + 1 == lines.size()) break;
      throw;
    }
  }
  return records;
}

namespace {

std::vector<std::vector<std::int64_t>> expand_params(const Json& f) {
  std::vector<std::vector<std::int64_t>> out;
  if (f.contains("params")) {
    for (const auto& p : f.at("params")) out.push_back(p.get<std::vector<std::int64_t>>());
  }
  if (f.contains("n")) {
    const auto range = f.at("n").get<std::vector<std::int64_t>>();
    if (range.size() != 2 || range[0] > range[1]) fail(ErrorKind::invalid_params, "\"n\" must be [lo, hi]");
    const auto step = f.value("step", std::int64_t{1});
    if (step < 1) fail(ErrorKind::invalid_params, "\"step\" must be positive");
    const auto append = f.value("append", std::vector<std::int64_t>{});
    for (auto n = range[0]; n <= range[1]; n += step) {
      std::vector<std::int64_t> p{n};
      p.insert(p.end(), append.begin(), append.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

DatasetConfig parse_dataset_config(const Json& j) {
  try {
    DatasetConfig c;
    c.name = j.value("name", c.name);
    c.seed = j.value("seed", c.seed);
    c.pmin.target_ratio = j.value("target_ratio", c.pmin.target_ratio);
    c.pmin.p_start = j.value("p_start", c.pmin.p_start);
    c.pmin.p_cap = j.value("p_cap", c.pmin.p_cap);
    c.pmin.restarts = j.value("restarts", c.pmin.restarts);
    c.pmin.warm_start = j.value("warm_start", c.pmin.warm_start);
    c.max_vertices = j.value("max_vertices", c.max_vertices);
    if (j.contains("nelder_mead")) {
      const auto& nm = j.at("nelder_mead");
      c.pmin.local.initial_step = nm.value("initial_step", c.pmin.local.initial_step);
      c.pmin.local.f_tolerance = nm.value("f_tolerance", c.pmin.local.f_tolerance);
      c.pmin.local.max_evaluations = nm.value("max_evaluations", c.pmin.local.max_evaluations);
    }
    if (j.contains("features")) {
      const auto& f = j.at("features");
      c.features.max_pairs = f.value("max_pairs", c.features.max_pairs);
      c.features.subsample_above_edges = f.value("subsample_above_edges", c.features.subsample_above_edges);
    }
    for (const auto& f : j.at("families")) {
      FamilySpec spec;
      spec.family = f.at("family").get<std::string>();
      const auto& known = family_names();
      if (std::find(known.begin(), known.end(), spec.family) == known.end())
        fail(ErrorKind::invalid_params, "unknown family '" + spec.family + "'");
      spec.instances = f.value("instances", 1);
      if (spec.instances < 1) fail(ErrorKind::invalid_params, "\"instances\" must be positive");
      if (spec.family == "hand-picked" || spec.family == "custom") {
        const auto& names = f.at(spec.family == "custom" ? "paths" : "names");
        if (names.is_string() && names.get<std::string>() == "all" && spec.family == "hand-picked") {
          spec.labels = handpicked_names();
        } else {
          spec.labels = names.get<std::vector<std::string>>();
        }
      } else {
        spec.params = expand_params(f);
        if (spec.params.empty()) fail(ErrorKind::invalid_params, spec.family + ": no parameters given");
      }
      c.families.push_back(std::move(spec));
    }
    if (c.pmin.p_start < 1 || c.pmin.p_cap < c.pmin.p_start || c.pmin.restarts < 1 || !(c.pmin.target_ratio > 0))
      fail(ErrorKind::invalid_params, "invalid p_min search settings");
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("bad dataset config: ") + e.what());
  }
}

DatasetConfig load_dataset_config(const std::string& path) {
  const auto text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, "bad JSON in '" + path + "': " + e.what());
  }
  return parse_dataset_config(j);
}

std::vector<InstanceSpec> expand_instances(const DatasetConfig& config) {
  std::vector<InstanceSpec> out;
  std::set<std::string> seen;
  auto add = [&](std::string id, GraphFamily family) {
    if (!seen.insert(id).second) fail(ErrorKind::invalid_params, "duplicate instance id '" + id + "'");
    family.seed = derive_seed(config.seed, hash_string(id));
    out.push_back({std::move(id), std::move(family)});
  };
  for (const auto& spec : config.families) {
    if (!spec.labels.empty()) {
      for (const auto& label : spec.labels) add(spec.family + ":" + label, {spec.family, {}, 0, label});
      continue;
    }
    const int copies = is_seeded_family(spec.family) ? spec.instances : 1;
    for (const auto& params : spec.params) {
      std::string base = spec.family + ":";
      for (std::size_t i = 0; i < params.size(); ++i) base += (i ? "x" : "") + std::to_string(params[i]);
      for (int s = 0; s < copies; ++s) add(is_seeded_family(spec.family) ? base + ":" + std::to_string(s) : base, {spec.family, params, 0, {}});
    }
  }
  return out;
}

InstanceRecord compute_record(const InstanceSpec& spec, const DatasetConfig& config, const RecordOptions& options) {
  using Clock = std::chrono::steady_clock;
  InstanceRecord r;
  r.id = spec.id;
  r.family = spec.family;
  r.graph = generate(spec.family);
  if (r.graph.num_vertices() > config.max_vertices)
    fail(ErrorKind::size_limit, spec.id + ": " + std::to_string(r.graph.num_vertices()) + " vertices exceeds max_vertices");

  const auto t0 = Clock::now();
  FeatureOptions fopt = config.features;
  fopt.seed = derive_seed(spec.family.seed, kFeatureSalt);
  fopt.threads = options.threads;
  r.features = feature_vector(r.graph, fopt);

  const auto t1 = Clock::now();
  PminOptions popt = config.pmin;
  popt.seed = derive_seed(spec.family.seed, kPminSalt);
  popt.threads = options.threads;
  const auto result = find_pmin(r.graph, popt);
  const auto t2 = Clock::now();

  r.optimum_cut = result.optimum_cut;
  r.p_min = result.p_min;
  r.ratio_achieved = result.ratio_achieved;
  r.best_schedule = result.best_schedule;
  for (const auto& t : result.trace) r.trace.push_back(t.best_ratio);
  r.target_ratio = popt.target_ratio;
  r.p_start = popt.p_start;
  r.p_cap = popt.p_cap;
  r.restarts = popt.restarts;
  r.software_version = std::string(software_version());
  if (options.timing) {
    r.timing = InstanceTiming{std::chrono::duration<double>(t1 - t0).count(), std::chrono::duration<double>(t2 - t1).count()};
  }
  return r;
}

GenerateSummary gen_dataset(const DatasetConfig& config, const std::string& path, const GenerateOptions& options) {
  namespace fs = std::filesystem;
  const auto specs = expand_instances(config);
  GenerateSummary summary;
  summary.total = specs.size();

  std::set<std::string> have;
  if (fs::exists(path)) {
    const auto text = read_file(path);
    bool partial = false;
    const auto lines = split_lines(text, partial);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (partial && i + 1 == lines.size()) break;
      if (blank(lines[i])) continue;
      have.insert(parse_record(lines[i]).id);
    }
    if (partial) fs::resize_file(path, text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1);
  }

  std::vector<const InstanceSpec*> pending;
  for (const auto& s : specs) {
    if (have.count(s.id)) {
      ++summary.existing;
    } else {
      pending.push_back(&s);
    }
  }
  if (pending.empty()) return summary;

  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) fail(ErrorKind::io_error, "cannot write '" + path + "'");

  // Workers finish out of order; lines are released strictly in order.
  std::mutex mutex;
  std::vector<std::optional<InstanceRecord>> done(pending.size());
  std::size_t next = 0;
  parallel_for(pending.size(), options.threads, [&](std::size_t i) {
    auto record = compute_record(*pending[i], config, {options.timing, 1});
    std::lock_guard lock(mutex);
    done[i] = std::move(record);
    while (next < done.size() && done[next]) {
      out << serialize_record(*done[next]) << '\n';
      out.flush();
      if (!out) fail(ErrorKind::io_error, "write to '" + path + "' failed");
      ++summary.written;
      if (options.progress) options.progress(*done[next], summary.existing + summary.written, summary.total);
      done[next].reset();
      ++next;
    }
  });
  return summary;
}

std::vector<bool> split_dataset(const std::vector<InstanceRecord>& records, const SplitSpec& spec) {
  if (!(spec.test_fraction >= 0 && spec.test_fraction <= 1)) fail(ErrorKind::invalid_params, "test fraction must be in [0, 1]");
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) groups[records[i].family.name].push_back(i);
  std::vector<bool> test(records.size(), false);
  for (auto& [family, rows] : groups) {
    Rng rng(derive_seed(spec.seed, hash_string(family)));
    rng.shuffle(rows.begin(), rows.end());
    const auto count = rows.size();
    auto k = static_cast<std::size_t>(std::llround(spec.test_fraction * static_cast<double>(count)));
    if (count >= 2 && spec.test_fraction > 0 && spec.test_fraction < 1) k = std::clamp<std::size_t>(k, 1, count - 1);
    for (std::size_t i = 0; i < k; ++i) test[rows[i]] = true;
  }
  return test;
}

std::vector<FeatureCorrelation> feature_correlations(const std::vector<InstanceRecord>& records) {
  std::vector<std::vector<double>> columns(kNumFeatures);
  std::vector<double> y;
  for (const auto& r : records) {
    if (r.censored()) continue;
    const auto f = r.features.to_array();
    for (std::size_t k = 0; k < kNumFeatures; ++k) columns[k].push_back(f[k]);
    y.push_back(*r.p_min);
  }
  std::vector<FeatureCorrelation> out;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    FeatureCorrelation c{std::string(SymmetryFeatures::names()[k]), std::nullopt};
    try {
      c.r = pearson_r(columns[k], y);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::constant_input && e.kind() != ErrorKind::empty_input) throw;
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

Eigen::MatrixXd feature_matrix(const std::vector<const InstanceRecord*>& rows) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(kNumFeatures));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto f = rows[i]->features.to_array();
    for (std::size_t k = 0; k < kNumFeatures; ++k) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = f[k];
  }
  return x;
}

Eigen::VectorXd label_vector(const std::vector<const InstanceRecord*>& rows) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) y[static_cast<Eigen::Index>(i)] = rows[i]->label();
  return y;
}

ModelScores score(const std::vector<ScatterRow>& rows, bool ordinal) {
  std::vector<double> train_pred, train_true, test_pred, test_true;
  for (const auto& r : rows) {
    (r.test ? test_pred : train_pred).push_back(ordinal ? r.ordinal : r.regression);
    (r.test ? test_true : train_true).push_back(r.truth);
  }
  ModelScores s;
  if (!train_pred.empty()) s.train_mae = median_abs_err(train_pred, train_true);
  if (!test_pred.empty()) s.test_mae = median_abs_err(test_pred, test_true);
  try {
    if (test_pred.size() >= 2) s.test_pearson = pearson_r(test_pred, test_true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::constant_input) throw;
  }
  return s;
}

}  // namespace

TrainResult train_models(const std::vector<InstanceRecord>& records, const TrainOptions& options) {
  TrainResult result;
  auto& report = result.report;
  report.records = records.size();
  for (const auto& r : records) report.censored += r.censored();
  if (records.size() - report.censored < options.min_records)
    fail(ErrorKind::insufficient_data, "need at least " + std::to_string(options.min_records) + " non-censored records, have " +
                                           std::to_string(records.size() - report.censored));

  const auto is_test = split_dataset(records, options.split);
  std::vector<const InstanceRecord*> reg_rows, ord_rows;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (is_test[i]) {
      report.test_ids.push_back(records[i].id);
      continue;
    }
    report.train_ids.push_back(records[i].id);
    ord_rows.push_back(&records[i]);
    if (!records[i].censored()) reg_rows.push_back(&records[i]);
  }
  report.train_size = report.train_ids.size();
  report.test_size = report.test_ids.size();

  const Eigen::MatrixXd reg_x = feature_matrix(reg_rows);
  const Eigen::VectorXd reg_y = label_vector(reg_rows);
  std::vector<std::string> strata;
  for (const auto* r : reg_rows) strata.push_back(r->family.name);
  const auto cv = cross_validate_regressor(reg_x, reg_y, strata, options.folds, derive_seed(options.split.seed, 1),
                                           options.gammas, options.lambdas, options.threads);
  report.params = cv.best;
  report.cv_score = cv.best_score;

  result.regressor = fit_regression_model(reg_x, reg_y, cv.best);
  result.ordinal = fit_ordinal_model(feature_matrix(ord_rows), label_vector(ord_rows), options.cutoffs, cv.best, options.threads);
  report.warnings = result.ordinal.ordinal.warnings;
  if (result.regressor.standardizer.has_warning()) report.warnings.push_back("some features are constant on the training split");

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.censored()) continue;
    const auto f = r.features.to_array();
    report.scatter.push_back({r.id, r.family.name, is_test[i], *r.p_min, result.regressor.predict(f), result.ordinal.predict(f)});
  }
  report.regression = score(report.scatter, false);
  report.ordinal = score(report.scatter, true);
  report.correlations = feature_correlations(records);
  return result;
}

namespace {

Json scores_json(const ModelScores& s) {
  return Json{{"train_median_abs_err", s.train_mae},
              {"test_median_abs_err", s.test_mae},
              {"test_pearson", s.test_pearson ? Json(*s.test_pearson) : Json(nullptr)}};
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

Json report_to_json(const TrainReport& report) {
  Json j;
  j["records"] = report.records;
  j["censored"] = report.censored;
  j["train_size"] = report.train_size;
  j["test_size"] = report.test_size;
  j["kernel"] = Json{{"gamma", report.params.gamma}, {"lambda", report.params.lambda}, {"cv_median_abs_err", report.cv_score}};
  Json corr = Json::array();
  for (const auto& c : report.correlations) corr.push_back(Json{{"feature", c.name}, {"r", c.r ? Json(*c.r) : Json(nullptr)}});
  j["correlations"] = std::move(corr);
  j["regression"] = scores_json(report.regression);
  j["ordinal"] = scores_json(report.ordinal);
  j["train_ids"] = report.train_ids;
  j["test_ids"] = report.test_ids;
  j["warnings"] = report.warnings;
  return j;
}

std::string report_text(const TrainReport& report) {
  std::ostringstream s;
  s << "records " << report.records << " (censored " << report.censored << "), train " << report.train_size << ", test "
    << report.test_size << "\n\n";
  s << "feature            pearson_r  sign\n";
  for (const auto& c : report.correlations) {
    s << c.name << std::string(c.name.size() < 19 ? 19 - c.name.size() : 1, ' ');
    if (c.r) {
      s << fmt("%9.5f", *c.r) << "  " << (*c.r > 0 ? "+" : *c.r < 0 ? "-" : "0") << '\n';
    } else {
      s << "      n/a  n/a\n";
    }
  }
  s << "\nkernel gamma " << report.params.gamma << ", lambda " << report.params.lambda << ", cv median abs err "
    << fmt("%.4f", report.cv_score) << "\n\n";
  auto model = [&](const char* name, const ModelScores& m) {
    s << name << ": train median abs err " << fmt("%.4f", m.train_mae) << ", test median abs err " << fmt("%.4f", m.test_mae)
      << ", test pearson " << (m.test_pearson ? fmt("%.4f", *m.test_pearson) : std::string("n/a")) << '\n';
  };
  model("regression", report.regression);
  model("ordinal   ", report.ordinal);
  for (const auto& w : report.warnings) s << "warning: " << w << '\n';
  return s.str();
}

std::string scatter_csv(const TrainReport& report) {
  std::ostringstream s;
  s << "id,family,split,true_pmin,regression,ordinal\n";
  for (const auto& r : report.scatter)
    s << r.id << ',' << r.family << ',' << (r.test ? "test" : "train") << ',' << r.truth << ',' << fmt("%.17g", r.regression)
      << ',' << fmt("%.17g", r.ordinal) << '\n';
  return s.str();
}

std::string dataset_summary(const std::vector<InstanceRecord>& records) {
  struct Row {
    std::size_t count = 0, censored = 0;
    int n_lo = 1 << 30, n_hi = 0;
    std::size_t e_lo = SIZE_MAX, e_hi = 0;
    double log_aut = 0, pmin = 0;
    std::size_t solved = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const auto& r : records) {
    const auto& name = r.family.name;
    if (!rows.count(name)) order.push_back(name);
    auto& row = rows[name];
    ++row.count;
    row.n_lo = std::min(row.n_lo, r.graph.num_vertices());
    row.n_hi = std::max(row.n_hi, r.graph.num_vertices());
    row.e_lo = std::min(row.e_lo, r.graph.num_edges());
    row.e_hi = std::max(row.e_hi, r.graph.num_edges());
    row.log_aut += r.features.log_aut;
    if (r.censored()) {
      ++row.censored;
    } else {
      row.pmin += *r.p_min;
      ++row.solved;
    }
  }
  std::ostringstream s;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-16s %5s %9s %9s %10s %9s %8s\n", "family", "count", "n", "|E|", "log|Aut|", "mean_pmin", "censored");
  s << buf;
  for (const auto& name : order) {
    const auto& r = rows[name];
    const std::string n = std::to_string(r.n_lo) + "-" + std::to_string(r.n_hi);
    const std::string e = std::to_string(r.e_lo) + "-" + std::to_string(r.e_hi);
    std::snprintf(buf, sizeof buf, "%-16s %5zu %9s %9s %10.2f %9s %8zu\n", name.c_str(), r.count, n.c_str(), e.c_str(),
                  r.log_aut / static_cast<double>(r.count),
                  r.solved ? fmt("%.2f", r.pmin / static_cast<double>(r.solved)).c_str() : "n/a", r.censored);
    s << buf;
  }
  return s.str();
}

}  // namespace qsym
