#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsym/features.hpp"
#include "qsym/generators.hpp"
#include "qsym/graph.hpp"
#include "qsym/ml.hpp"
#include "qsym/schedule.hpp"

namespace qsym {

inline constexpr int kSchemaVersion = 1;

std::string_view software_version();

using Json = nlohmann::ordered_json;

struct InstanceSpec {
  std::string id;
  GraphFamily family;
};

struct InstanceTiming {
  double features_seconds = 0;
  double pmin_seconds = 0;
};

struct InstanceRecord {
  std::string id;
  GraphFamily family;
  Graph graph;
  std::int64_t optimum_cut = 0;
  SymmetryFeatures features;
  std::optional<int> p_min;  ///< empty when censored
  double ratio_achieved = 0;
  LinearSchedule best_schedule;
  std::vector<double> trace;  ///< best ratio at p_start, p_start+1, ...
  double target_ratio = 0.95;
  int p_start = 2;
  int p_cap = 25;
  int restarts = 50;
  std::string software_version;
  std::optional<InstanceTiming> timing;

  bool censored() const noexcept { return !p_min.has_value(); }
  /// p_min, or p_cap + 1 for censored records.
  int label() const noexcept { return p_min.value_or(p_cap + 1); }
};

Json to_json(const InstanceRecord& r);
InstanceRecord record_from_json(const Json& j);
std::string serialize_record(const InstanceRecord& r);
InstanceRecord parse_record(std::string_view line);

/// Reads a JSONL dataset. A truncated final line (interrupted writer) is
/// ignored; any other malformed line throws parse-error.
std::vector<InstanceRecord> read_dataset(const std::string& path);

struct FamilySpec {
  std::string family;
  std::vector<std::vector<std::int64_t>> params;
  std::vector<std::string> labels;  ///< hand-picked names or custom paths
  int instances = 1;                ///< seeds per parameter set
};

struct DatasetConfig {
  std::string name = "dataset";
  std::uint64_t seed = 0;
  PminOptions pmin;
  FeatureOptions features;
  int max_vertices = 20;
  std::vector<FamilySpec> families;
};

/// Family entries accept "params" (explicit lists), or "n": [lo, hi]
/// with optional "step" and "append" (extra trailing parameters), plus
/// "instances" for seeded families and "names" for hand-picked graphs.
DatasetConfig parse_dataset_config(const Json& j);
DatasetConfig load_dataset_config(const std::string& path);

/// Instance list in a fixed order. Ids encode family, params and seed
/// index; each graph seed is derived from the config seed and the id.
std::vector<InstanceSpec> expand_instances(const DatasetConfig& config);

struct RecordOptions {
  bool timing = false;
  unsigned threads = 1;
};

InstanceRecord compute_record(const InstanceSpec& spec, const DatasetConfig& config, const RecordOptions& options = {});

struct GenerateOptions {
  unsigned threads = 1;
  bool timing = false;
  std::function<void(const InstanceRecord&, std::size_t done, std::size_t total)> progress;
};

struct GenerateSummary {
  std::size_t total = 0;
  std::size_t existing = 0;
  std::size_t written = 0;
};

/// Appends one line per missing instance, in instance order. Existing ids
/// are skipped, so an interrupted run resumes where it stopped.
GenerateSummary gen_dataset(const DatasetConfig& config, const std::string& path, const GenerateOptions& options = {});

struct SplitSpec {
  double test_fraction = 0.30;
  std::uint64_t seed = 0;
};

/// is_test flag per record, stratified by family name.
std::vector<bool> split_dataset(const std::vector<InstanceRecord>& records, const SplitSpec& spec);

struct TrainOptions {
  SplitSpec split;
  std::vector<int> cutoffs = default_cutoffs();
  std::vector<double> gammas = default_gamma_grid();
  std::vector<double> lambdas = default_lambda_grid();
  int folds = 5;
  unsigned threads = 1;
  std::size_t min_records = 30;
};

struct FeatureCorrelation {
  std::string name;
  std::optional<double> r;  ///< empty when the feature is constant
};

struct ScatterRow {
  std::string id;
  std::string family;
  bool test = false;
  int truth = 0;
  double regression = 0;
  double ordinal = 0;
};

struct ModelScores {
  double train_mae = 0;
  double test_mae = 0;
  std::optional<double> test_pearson;
};

struct TrainReport {
  std::size_t records = 0;
  std::size_t censored = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  KernelParams params;
  double cv_score = 0;
  std::vector<FeatureCorrelation> correlations;
  ModelScores regression;
  ModelScores ordinal;
  std::vector<ScatterRow> scatter;
  std::vector<std::string> warnings;
};

struct TrainResult {
  PminModel regressor;
  PminModel ordinal;
  TrainReport report;
};

/// Per-feature Pearson r against p_min over non-censored records.
std::vector<FeatureCorrelation> feature_correlations(const std::vector<InstanceRecord>& records);

/// Regression uses non-censored training records; the ordinal ensemble
/// also sees censored ones (top class). Errors are measured on
/// non-censored records.
TrainResult train_models(const std::vector<InstanceRecord>& records, const TrainOptions& options);

Json report_to_json(const TrainReport& report);
std::string report_text(const TrainReport& report);
std::string scatter_csv(const TrainReport& report);

/// Per-family summary table (count, n and |E| ranges, mean log|Aut|,
/// mean p_min, censored count) as text.
std::string dataset_summary(const std::vector<InstanceRecord>& records);

}  // namespace qsym
