#include "qsym/ml.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qsym/error.hpp"
#include "qsym/parallel.hpp"
#include "qsym/rng.hpp"

namespace qsym {

Standardizer Standardizer::fit(const Eigen::MatrixXd& x) {
  if (x.rows() < 2) fail(ErrorKind::empty_input, "standardizer needs at least 2 rows");
  Standardizer s;
  const auto cols = static_cast<std::size_t>(x.cols());
  s.means.resize(cols);
  s.stds.resize(cols);
  s.constant.resize(cols);
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mean = x.col(j).mean();
    const double var = (x.col(j).array() - mean).square().mean();
    const auto k = static_cast<std::size_t>(j);
    s.means[k] = mean;
    s.constant[k] = !(var > 1e-24 * std::max(1.0, mean * mean));
    s.stds[k] = s.constant[k] ? 1.0 : std::sqrt(var);
  }
  return s;
}

Eigen::MatrixXd Standardizer::apply(const Eigen::MatrixXd& x) const {
  if (static_cast<std::size_t>(x.cols()) != dim()) fail(ErrorKind::dimension_mismatch, "feature count differs from standardizer");
  Eigen::MatrixXd out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    out.col(j) = (x.col(j).array() - means[k]) / stds[k];
  }
  return out;
}

Eigen::VectorXd Standardizer::apply(std::span<const double> row) const {
  if (row.size() != dim()) fail(ErrorKind::dimension_mismatch, "feature count differs from standardizer");
  Eigen::VectorXd out(static_cast<Eigen::Index>(row.size()));
  for (std::size_t k = 0; k < row.size(); ++k) out[static_cast<Eigen::Index>(k)] = (row[k] - means[k]) / stds[k];
  return out;
}

bool Standardizer::has_warning() const { return std::find(constant.begin(), constant.end(), true) != constant.end(); }

double rbf(std::span<const double> x, std::span<const double> y, double gamma) {
  if (x.size() != y.size()) fail(ErrorKind::dimension_mismatch, "rbf arguments differ in length");
  double d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
  return std::exp(-gamma * d2);
}

double rbf(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y, double gamma) {
  return std::exp(-gamma * (x - y).squaredNorm());
}

double KernelModel::predict(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != support.cols()) fail(ErrorKind::dimension_mismatch, "feature count differs from model");
  double s = bias;
  for (Eigen::Index i = 0; i < support.rows(); ++i) s += weights[i] * std::exp(-params.gamma * (support.row(i).transpose() - x).squaredNorm());
  return s;
}

namespace {

void check_params(const KernelParams& p) {
  if (!(p.gamma > 0) || !(p.lambda >= 0) || !std::isfinite(p.gamma) || !std::isfinite(p.lambda))
    fail(ErrorKind::invalid_params, "need gamma > 0 and lambda >= 0");
}

Eigen::MatrixXd gram(const Eigen::MatrixXd& x, double gamma) {
  const auto n = x.rows();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) k(i, j) = k(j, i) = std::exp(-gamma * (x.row(i) - x.row(j)).squaredNorm());
  }
  return k;
}

}  // namespace

KernelModel train_regressor(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const KernelParams& params) {
  check_params(params);
  if (x.rows() == 0) fail(ErrorKind::empty_input, "no training rows");
  if (x.rows() != y.size()) fail(ErrorKind::dimension_mismatch, "row count differs from label count");
  if (params.lambda == 0) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = i + 1; j < x.rows(); ++j)
        if (x.row(i) == x.row(j)) fail(ErrorKind::singular_system, "duplicate rows with lambda = 0");
  }
  KernelModel m;
  m.params = params;
  m.support = x;
  m.bias = y.mean();
  Eigen::MatrixXd a = gram(x, params.gamma);
  a.diagonal().array() += params.lambda;
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) fail(ErrorKind::singular_system, "kernel system is not positive definite");
  m.weights = llt.solve((y.array() - m.bias).matrix());
  if (!m.weights.allFinite()) fail(ErrorKind::singular_system, "kernel system solve produced non-finite weights");
  return m;
}

KernelModel train_classifier(const Eigen::MatrixXd& x, const Eigen::VectorXd& labels, const KernelParams& params,
                             const ClassifierOptions& options) {
  check_params(params);
  if (x.rows() == 0) fail(ErrorKind::empty_input, "no training rows");
  if (x.rows() != labels.size()) fail(ErrorKind::dimension_mismatch, "row count differs from label count");
  for (Eigen::Index i = 0; i < labels.size(); ++i)
    if (labels[i] != 1.0 && labels[i] != -1.0) fail(ErrorKind::invalid_params, "classifier labels must be +1 or -1");
  const auto n = x.rows();
  const Eigen::MatrixXd k = gram(x, params.gamma);
  const double lambda = params.lambda;
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  double bias = 0;
  const auto objective = [&](const Eigen::VectorXd& a, double b) {
    const Eigen::VectorXd ka = k * a;
    double s = 0.5 * lambda * a.dot(ka);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double m = -labels[i] * (ka[i] + b);
      s += m > 0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m));
    }
    return s;
  };
  double current = objective(alpha, bias);
  Eigen::MatrixXd h(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  for (int it = 0; it < options.max_iterations; ++it) {
    const Eigen::VectorXd f = (k * alpha).array() + bias;
    Eigen::VectorXd g(n), w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = 1.0 / (1.0 + std::exp(labels[i] * f[i]));
      g[i] = -labels[i] * s;
      w[i] = std::max(s * (1.0 - s), 1e-12);
    }
    // Newton system with K factored out of the α rows:
    // W(KΔα + Δb) + λΔα = -(g + λα),  1'W(KΔα + Δb) = -1'g.
    h.topLeftCorner(n, n) = w.asDiagonal() * k;
    h.topLeftCorner(n, n).diagonal().array() += lambda;
    h.topRightCorner(n, 1) = w;
    h.bottomLeftCorner(1, n) = w.transpose() * k;
    h(n, n) = w.sum();
    rhs.head(n) = -(g + lambda * alpha);
    rhs[n] = -g.sum();
    const Eigen::VectorXd step = h.partialPivLu().solve(rhs);
    if (!step.allFinite()) fail(ErrorKind::singular_system, "classifier Newton system is singular");
    double t = 1.0;
    Eigen::VectorXd next_alpha;
    double next_bias = 0, next = 0;
    for (int half = 0; half < 40; ++half, t *= 0.5) {
      next_alpha = alpha + t * step.head(n);
      next_bias = bias + t * step[n];
      next = objective(next_alpha, next_bias);
      if (next <= current) break;
    }
    if (!(next <= current)) break;
    alpha = next_alpha;
    bias = next_bias;
    const double decrease = current - next;
    current = next;
    if (decrease <= options.tolerance * std::max(1.0, current)) break;
  }
  KernelModel m;
  m.params = params;
  m.support = x;
  m.weights = alpha;
  m.bias = bias;
  return m;
}

std::vector<int> default_cutoffs() {
  std::vector<int> c(13);
  std::iota(c.begin(), c.end(), 3);
  return c;
}

std::vector<double> OrdinalEnsemble::scores(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  std::vector<double> out(classifiers.size());
  for (std::size_t i = 0; i < classifiers.size(); ++i) out[i] = classifiers[i].predict(x) / sigmas[i];
  return out;
}

double OrdinalEnsemble::predict(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (cutoffs.size() < 3) fail(ErrorKind::too_few_cutoffs, "ordinal prediction needs at least 3 cutoffs");
  const auto dz = scores(x);
  return ordinal_decision(cutoffs, dz, min_label, max_label);
}

OrdinalEnsemble train_ordinal(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<int>& cutoffs,
                              const KernelParams& params, const ClassifierOptions& options, unsigned threads) {
  if (x.rows() != y.size()) fail(ErrorKind::dimension_mismatch, "row count differs from label count");
  if (y.size() < 2) fail(ErrorKind::empty_input, "need at least 2 training rows");
  if (cutoffs.empty()) fail(ErrorKind::too_few_cutoffs, "no cutoffs given");
  for (std::size_t i = 1; i < cutoffs.size(); ++i)
    if (cutoffs[i] <= cutoffs[i - 1]) fail(ErrorKind::invalid_params, "cutoffs must be strictly increasing");

  const double top = cutoffs.back();
  const Eigen::VectorXd collapsed = y.array().min(top);

  std::vector<Eigen::VectorXd> labels(cutoffs.size());
  std::vector<bool> splits(cutoffs.size());
  for (std::size_t c = 0; c < cutoffs.size(); ++c) {
    labels[c] = (collapsed.array() < cutoffs[c]).select(Eigen::VectorXd::Ones(y.size()), -Eigen::VectorXd::Ones(y.size()));
    const auto pos = (labels[c].array() > 0).count();
    splits[c] = pos > 0 && pos < y.size();
  }

  std::vector<KernelModel> models(cutoffs.size());
  std::vector<double> sigma(cutoffs.size(), 0.0);
  parallel_for(cutoffs.size(), threads, [&](std::size_t c) {
    if (!splits[c]) return;
    models[c] = train_classifier(x, labels[c], params, options);
    Eigen::VectorXd s(y.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i) s[i] = models[c].predict(x.row(i).transpose());
    sigma[c] = std::sqrt((s.array() - s.mean()).square().mean());
  });

  OrdinalEnsemble e;
  for (std::size_t c = 0; c < cutoffs.size(); ++c) {
    if (!splits[c]) {
      e.warnings.push_back("cutoff " + std::to_string(cutoffs[c]) + " does not split the labels; dropped");
      continue;
    }
    if (!(sigma[c] > 0)) {
      e.warnings.push_back("cutoff " + std::to_string(cutoffs[c]) + " has constant scores; dropped");
      continue;
    }
    e.cutoffs.push_back(cutoffs[c]);
    e.classifiers.push_back(std::move(models[c]));
    e.sigmas.push_back(sigma[c]);
  }
  if (e.cutoffs.empty()) fail(ErrorKind::degenerate_labels, "no cutoff splits the training labels");
  e.min_label = y.minCoeff();
  e.max_label = collapsed.maxCoeff();
  return e;
}

double ordinal_decision(std::span<const int> cutoffs, std::span<const double> dz, double min_label, double max_label) {
  if (cutoffs.size() != dz.size()) fail(ErrorKind::dimension_mismatch, "one score per cutoff expected");
  if (cutoffs.size() < 3) fail(ErrorKind::too_few_cutoffs, "quadratic fit needs at least 3 cutoffs");
  const auto m = static_cast<Eigen::Index>(cutoffs.size());
  const double lo = cutoffs.front(), hi = cutoffs.back();
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double t = (cutoffs[static_cast<std::size_t>(i)] - mid) / half;
    a(i, 0) = 1;
    a(i, 1) = t;
    a(i, 2) = t * t;
    b[i] = dz[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(b);
  const double c0 = coef[0], c1 = coef[1], c2 = coef[2];

  std::vector<double> roots;
  const double scale = std::abs(c0) + std::abs(c1) + std::abs(c2);
  if (std::abs(c2) <= 1e-12 * scale) {
    if (c1 != 0) roots.push_back(-c0 / c1);
  } else {
    const double disc = c1 * c1 - 4 * c2 * c0;
    if (disc >= 0) {
      const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
      if (q != 0) roots.push_back(c0 / q);
      roots.push_back(q / c2);
    }
  }
  constexpr double kEdge = 1e-9;
  std::optional<double> best;
  for (double t : roots) {
    if (!std::isfinite(t) || t < -1 - kEdge || t > 1 + kEdge) continue;
    if (2 * c2 * t + c1 <= 0) continue;
    best = std::clamp(t, -1.0, 1.0);
  }
  if (best) return mid + half * *best;

  const auto positive = std::count_if(dz.begin(), dz.end(), [](double d) { return d > 0; });
  return 2 * positive > static_cast<std::ptrdiff_t>(dz.size()) ? min_label : max_label;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail(ErrorKind::dimension_mismatch, "pearson inputs differ in length");
  if (x.size() < 2) fail(ErrorKind::empty_input, "pearson needs at least 2 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0) || !(syy > 0)) fail(ErrorKind::constant_input, "pearson correlation undefined for constant input");
  return sxy / std::sqrt(sxx * syy);
}

double median_abs_err(std::span<const double> pred, std::span<const double> truth) {
  if (pred.size() != truth.size()) fail(ErrorKind::dimension_mismatch, "prediction and truth differ in length");
  if (pred.empty()) fail(ErrorKind::empty_input, "no predictions");
  std::vector<double> e(pred.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::abs(pred[i] - truth[i]);
  std::sort(e.begin(), e.end());
  const auto h = e.size() / 2;
  return e.size() % 2 ? e[h] : 0.5 * (e[h - 1] + e[h]);
}

std::vector<double> default_gamma_grid() { return {0.01, 0.03, 0.1, 0.3, 1, 3, 10}; }
std::vector<double> default_lambda_grid() { return {1e-4, 1e-3, 1e-2, 0.1, 1, 10}; }

std::vector<int> stratified_folds(std::span<const std::string> strata, int folds, std::uint64_t seed) {
  if (folds < 1) fail(ErrorKind::invalid_params, "need at least one fold");
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < strata.size(); ++i) groups[strata[i]].push_back(i);
  std::vector<int> fold(strata.size());
  std::size_t offset = 0;
  for (auto& [key, rows] : groups) {
    Rng rng(derive_seed(seed, hash_string(key)));
    rng.shuffle(rows.begin(), rows.end());
    for (std::size_t k = 0; k < rows.size(); ++k) fold[rows[k]] = static_cast<int>((offset + k) % static_cast<std::size_t>(folds));
    offset += rows.size();
  }
  return fold;
}

namespace {

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& x, const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
  return out;
}

}  // namespace

CvResult cross_validate_regressor(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::span<const std::string> strata,
                                  int folds, std::uint64_t seed, std::span<const double> gammas,
                                  std::span<const double> lambdas, unsigned threads) {
  if (x.rows() != y.size() || static_cast<std::size_t>(y.size()) != strata.size())
    fail(ErrorKind::dimension_mismatch, "rows, labels and strata differ in length");
  if (gammas.empty() || lambdas.empty()) fail(ErrorKind::invalid_params, "empty hyperparameter grid");
  folds = std::min<int>(folds, static_cast<int>(y.size()) / 2);
  if (folds < 2) fail(ErrorKind::insufficient_data, "too few rows for cross-validation");
  const auto assignment = stratified_folds(strata, folds, seed);

  // Per-fold standardized train/validation blocks.
  struct Fold {
    Eigen::MatrixXd train_x, valid_x;
    Eigen::VectorXd train_y;
    std::vector<Eigen::Index> valid_rows;
  };
  std::vector<Fold> parts(static_cast<std::size_t>(folds));
  for (int f = 0; f < folds; ++f) {
    std::vector<Eigen::Index> train, valid;
    for (Eigen::Index i = 0; i < y.size(); ++i) (assignment[static_cast<std::size_t>(i)] == f ? valid : train).push_back(i);
    auto& part = parts[static_cast<std::size_t>(f)];
    const Eigen::MatrixXd tx = select_rows(x, train);
    const auto s = Standardizer::fit(tx);
    part.train_x = s.apply(tx);
    part.valid_x = s.apply(select_rows(x, valid));
    part.train_y.resize(static_cast<Eigen::Index>(train.size()));
    for (std::size_t i = 0; i < train.size(); ++i) part.train_y[static_cast<Eigen::Index>(i)] = y[train[i]];
    part.valid_rows = std::move(valid);
  }

  CvResult result;
  for (double g : gammas)
    for (double l : lambdas) result.grid.push_back({{g, l}, 0.0});
  parallel_for(result.grid.size(), threads, [&](std::size_t k) {
    auto& entry = result.grid[k];
    std::vector<double> pred(static_cast<std::size_t>(y.size())), truth(pred.size());
    for (const auto& part : parts) {
      const auto model = train_regressor(part.train_x, part.train_y, entry.params);
      for (std::size_t i = 0; i < part.valid_rows.size(); ++i) {
        const auto row = static_cast<std::size_t>(part.valid_rows[i]);
        pred[row] = model.predict(part.valid_x.row(static_cast<Eigen::Index>(i)).transpose());
        truth[row] = y[part.valid_rows[i]];
      }
    }
    entry.score = median_abs_err(pred, truth);
  });
  result.best = result.grid.front().params;
  result.best_score = result.grid.front().score;
  for (const auto& e : result.grid) {
    if (e.score < result.best_score) {
      result.best = e.params;
      result.best_score = e.score;
    }
  }
  return result;
}

double PminModel::predict(std::span<const double> raw_features) const {
  const Eigen::VectorXd z = standardizer.apply(raw_features);
  return kind == ModelKind::regressor ? regressor.predict(z) : ordinal.predict(z);
}

namespace {

constexpr const char* kMagic = "qsym-model";
constexpr int kFormatVersion = 1;

void write_kernel(std::ostream& out, const KernelModel& m) {
  out << "kernel " << m.params.gamma << ' ' << m.params.lambda << ' ' << m.bias << ' ' << m.support.rows() << ' '
      << m.support.cols() << '\n';
  for (Eigen::Index i = 0; i < m.support.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.support.cols(); ++j) out << (j ? " " : "") << m.support(i, j);
    out << '\n';
  }
  for (Eigen::Index i = 0; i < m.weights.size(); ++i) out << (i ? " " : "") << m.weights[i];
  out << '\n';
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void expect(std::string_view word) {
    std::string got;
    if (!(in_ >> got) || got != word) fail(ErrorKind::parse_error, "model file: expected '" + std::string(word) + "'");
  }
  std::string word() {
    std::string w;
    if (!(in_ >> w)) fail(ErrorKind::parse_error, "model file truncated");
    return w;
  }
  double real() {
    // operator>> rejects inf/nan, which a valid model never contains.
    double v;
    if (!(in_ >> v)) fail(ErrorKind::parse_error, "model file: expected a number");
    return v;
  }
  long integer(long lo, long hi) {
    long v;
    if (!(in_ >> v) || v < lo || v > hi) fail(ErrorKind::parse_error, "model file: bad count");
    return v;
  }

 private:
  std::istream& in_;
};

KernelModel read_kernel(Reader& r) {
  r.expect("kernel");
  KernelModel m;
  m.params.gamma = r.real();
  m.params.lambda = r.real();
  m.bias = r.real();
  const auto rows = r.integer(0, 10'000'000);
  const auto cols = r.integer(0, 10'000);
  m.support.resize(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.support(i, j) = r.real();
  m.weights.resize(rows);
  for (long i = 0; i < rows; ++i) m.weights[i] = r.real();
  return m;
}

}  // namespace

void PminModel::save(std::ostream& out) const {
  const auto old_precision = out.precision(17);
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "kind " << (kind == ModelKind::regressor ? "regressor" : "ordinal") << '\n';
  out << "standardizer " << standardizer.dim() << '\n';
  for (std::size_t i = 0; i < standardizer.dim(); ++i) out << (i ? " " : "") << standardizer.means[i];
  out << '\n';
  for (std::size_t i = 0; i < standardizer.dim(); ++i) out << (i ? " " : "") << standardizer.stds[i];
  out << '\n';
  for (std::size_t i = 0; i < standardizer.dim(); ++i) out << (i ? " " : "") << (standardizer.constant[i] ? 1 : 0);
  out << '\n';
  if (kind == ModelKind::regressor) {
    write_kernel(out, regressor);
  } else {
    out << "ordinal " << ordinal.cutoffs.size() << ' ' << ordinal.min_label << ' ' << ordinal.max_label << '\n';
    for (std::size_t c = 0; c < ordinal.cutoffs.size(); ++c) {
      out << "cutoff " << ordinal.cutoffs[c] << ' ' << ordinal.sigmas[c] << '\n';
      write_kernel(out, ordinal.classifiers[c]);
    }
  }
  out << "end\n";
  out.precision(old_precision);
}

PminModel PminModel::load(std::istream& in) {
  Reader r(in);
  r.expect(kMagic);
  if (r.integer(0, 1000) != kFormatVersion) fail(ErrorKind::parse_error, "unsupported model format version");
  PminModel m;
  r.expect("kind");
  const auto kind = r.word();
  if (kind == "regressor") {
    m.kind = ModelKind::regressor;
  } else if (kind == "ordinal") {
    m.kind = ModelKind::ordinal;
  } else {
    fail(ErrorKind::parse_error, "unknown model kind '" + kind + "'");
  }
  r.expect("standardizer");
  const auto dim = static_cast<std::size_t>(r.integer(0, 10'000));
  auto& s = m.standardizer;
  s.means.resize(dim);
  s.stds.resize(dim);
  s.constant.resize(dim);
  for (auto& v : s.means) v = r.real();
  for (auto& v : s.stds) {
    v = r.real();
    if (!(v > 0)) fail(ErrorKind::parse_error, "model file: non-positive std");
  }
  for (std::size_t i = 0; i < dim; ++i) s.constant[i] = r.integer(0, 1) == 1;
  if (m.kind == ModelKind::regressor) {
    m.regressor = read_kernel(r);
    if (static_cast<std::size_t>(m.regressor.support.cols()) != dim && m.regressor.support.rows() > 0)
      fail(ErrorKind::parse_error, "model file: support dimension mismatch");
  } else {
    r.expect("ordinal");
    const auto count = static_cast<std::size_t>(r.integer(0, 10'000));
    m.ordinal.min_label = r.real();
    m.ordinal.max_label = r.real();
    for (std::size_t c = 0; c < count; ++c) {
      r.expect("cutoff");
      m.ordinal.cutoffs.push_back(static_cast<int>(r.integer(-1'000'000, 1'000'000)));
      m.ordinal.sigmas.push_back(r.real());
      m.ordinal.classifiers.push_back(read_kernel(r));
    }
  }
  r.expect("end");
  return m;
}

void PminModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::io_error, "cannot write '" + path + "'");
  save(out);
  if (!out) fail(ErrorKind::io_error, "write to '" + path + "' failed");
}

PminModel PminModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io_error, "cannot open '" + path + "'");
  return load(in);
}

PminModel fit_regression_model(const Eigen::MatrixXd& raw_x, const Eigen::VectorXd& y, const KernelParams& params) {
  PminModel m;
  m.kind = ModelKind::regressor;
  m.standardizer = Standardizer::fit(raw_x);
  m.regressor = train_regressor(m.standardizer.apply(raw_x), y, params);
  return m;
}

PminModel fit_ordinal_model(const Eigen::MatrixXd& raw_x, const Eigen::VectorXd& y, const std::vector<int>& cutoffs,
                            const KernelParams& params, unsigned threads) {
  PminModel m;
  m.kind = ModelKind::ordinal;
  m.standardizer = Standardizer::fit(raw_x);
  m.ordinal = train_ordinal(m.standardizer.apply(raw_x), y, cutoffs, params, {}, threads);
  return m;
}

}  // namespace qsym
