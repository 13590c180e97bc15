#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsym {

/// Per-column affine map to zero mean and unit population std.
struct Standardizer {
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<bool> constant;  ///< zero-variance columns (std forced to 1)

  static Standardizer fit(const Eigen::MatrixXd& x);
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  Eigen::VectorXd apply(std::span<const double> row) const;
  std::size_t dim() const noexcept { return means.size(); }
  bool has_warning() const;
};

double rbf(std::span<const double> x, std::span<const double> y, double gamma);
double rbf(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y, double gamma);

struct KernelParams {
  double gamma = 0.1;
  double lambda = 1e-2;
};

struct KernelModel {
  Eigen::MatrixXd support;  ///< one row per support point
  Eigen::VectorXd weights;
  KernelParams params;
  double bias = 0;

  double predict(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

/// Kernel ridge: weights = (K + λI)^{-1} (y - ȳ), bias = ȳ.
KernelModel train_regressor(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const KernelParams& params);

struct ClassifierOptions {
  int max_iterations = 100;
  double tolerance = 1e-10;  ///< stop when the Newton decrement falls below this
};

/// Kernel logistic regression on labels ±1: minimizes
/// sum_i ln(1 + exp(-y_i f_i)) + (λ/2) α'Kα with f = Kα + b by damped
/// Newton steps. predict() returns the logit.
KernelModel train_classifier(const Eigen::MatrixXd& x, const Eigen::VectorXd& labels, const KernelParams& params,
                             const ClassifierOptions& options = {});

std::vector<int> default_cutoffs();

struct OrdinalEnsemble {
  std::vector<int> cutoffs;
  std::vector<KernelModel> classifiers;
  std::vector<double> sigmas;
  double min_label = 0;
  double max_label = 0;
  std::vector<std::string> warnings;

  /// Standardized distances d/σ_c for each retained cutoff.
  std::vector<double> scores(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  double predict(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

/// Labels at or above the top cutoff are collapsed into one class. Cutoffs
/// that do not split the labels are dropped (noted in `warnings`).
OrdinalEnsemble train_ordinal(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<int>& cutoffs,
                              const KernelParams& params, const ClassifierOptions& options = {}, unsigned threads = 1);

/// Zero of the least-squares quadratic through (cutoff, d_z) where the fit
/// rises through zero, restricted to [cutoffs.front(), cutoffs.back()];
/// otherwise the majority vote (ties toward max_label).
double ordinal_decision(std::span<const int> cutoffs, std::span<const double> dz, double min_label, double max_label);

double pearson_r(std::span<const double> x, std::span<const double> y);
double median_abs_err(std::span<const double> pred, std::span<const double> truth);

struct CvResult {
  KernelParams best;
  double best_score = 0;
  struct Entry {
    KernelParams params;
    double score;
  };
  std::vector<Entry> grid;
};

std::vector<double> default_gamma_grid();
std::vector<double> default_lambda_grid();

/// Fold index per row; rows are shuffled within each stratum and dealt
/// round-robin so every stratum spreads across folds.
std::vector<int> stratified_folds(std::span<const std::string> strata, int folds, std::uint64_t seed);

/// Grid search for the regressor by k-fold CV on median absolute error.
/// Rows are standardized per fold on the training part only.
CvResult cross_validate_regressor(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                  std::span<const std::string> strata, int folds, std::uint64_t seed,
                                  std::span<const double> gammas, std::span<const double> lambdas,
                                  unsigned threads = 1);

enum class ModelKind { regressor, ordinal };

/// A standardizer plus one of the two predictors, persisted as text.
struct PminModel {
  ModelKind kind = ModelKind::regressor;
  Standardizer standardizer;
  KernelModel regressor;
  OrdinalEnsemble ordinal;

  double predict(std::span<const double> raw_features) const;

  void save(std::ostream& out) const;
  static PminModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static PminModel load_file(const std::string& path);
};

PminModel fit_regression_model(const Eigen::MatrixXd& raw_x, const Eigen::VectorXd& y, const KernelParams& params);
PminModel fit_ordinal_model(const Eigen::MatrixXd& raw_x, const Eigen::VectorXd& y, const std::vector<int>& cutoffs,
                            const KernelParams& params, unsigned threads = 1);

}  // namespace qsym
