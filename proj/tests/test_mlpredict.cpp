#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qsym/error.hpp"
#include "qsym/ml.hpp"

using namespace qsym;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

Eigen::MatrixXd column(std::initializer_list<double> v) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (double x : v) m(i++, 0) = x;
  return m;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// Two-feature synthetic ordinal problem: label grows with the first feature.
void synthetic(int rows, std::uint64_t seed, Eigen::MatrixXd& x, Eigen::VectorXd& y) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  x.resize(rows, 2);
  y.resize(rows);
  for (int i = 0; i < rows; ++i) {
    x(i, 0) = u(rng) * 10;
    x(i, 1) = u(rng);
    y[i] = std::round(2 + x(i, 0) * 1.3);
  }
}

}  // namespace

TEST_CASE("standardizer") {
  const auto s = Standardizer::fit(column({1, 2, 3}));
  CHECK(s.means[0] == doctest::Approx(2));
  CHECK(s.stds[0] == doctest::Approx(std::sqrt(2.0 / 3)));
  const auto z = s.apply(column({1, 2, 3}));
  CHECK(z(0, 0) == doctest::Approx(-1.2247448714));
  CHECK(z(1, 0) == doctest::Approx(0));
  CHECK(z(2, 0) == doctest::Approx(1.2247448714));
  CHECK_FALSE(s.has_warning());
  Eigen::MatrixXd c(3, 2);
  c << 1, 5, 2, 5, 3, 5;
  const auto sc = Standardizer::fit(c);
  CHECK(sc.constant[1]);
  CHECK(sc.stds[1] == 1);
  CHECK(sc.has_warning());
  const std::vector<double> row = {2, 5};
  CHECK(sc.apply(row)[1] == 0);
  CHECK(kind_of([] { Standardizer::fit(column({1})); }) == ErrorKind::empty_input);
}

TEST_CASE("rbf kernel") {
  const std::vector<double> a = {0, 0}, b = {1, 0};
  CHECK(rbf(a, b, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(rbf(a, a, 3.0) == 1.0);
  const std::vector<double> c = {1, 1};
  CHECK(rbf(a, c, 0.5) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("kernel ridge matches a direct linear solve") {
  const auto x = column({0, 1, 2, 3, 4});
  const auto y = vec({1, 3, 2, 5, 4});
  const KernelParams params{0.5, 1e-8};
  const auto m = train_regressor(x, y, params);
  const double mean = 3;
  std::vector<std::vector<double>> k(5, std::vector<double>(5));
  std::vector<double> rhs(5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::exp(-0.5 * (i - j) * (i - j)) + (i == j ? 1e-8 : 0);
    rhs[static_cast<std::size_t>(i)] = y[i] - mean;
  }
  const auto w = oracle::solve(k, rhs);
  for (int i = 0; i < 5; ++i) CHECK(m.weights[i] == doctest::Approx(w[static_cast<std::size_t>(i)]).epsilon(1e-6));
  for (int i = 0; i < 5; ++i) CHECK(m.predict(x.row(i).transpose()) == doctest::Approx(y[i]).epsilon(1e-6));
  double at = mean;
  for (int j = 0; j < 5; ++j) at += w[static_cast<std::size_t>(j)] * std::exp(-0.5 * (2.5 - j) * (2.5 - j));
  CHECK(m.predict(vec({2.5})) == doctest::Approx(at).epsilon(1e-6));
}

TEST_CASE("kernel ridge edge cases") {
  const auto one = train_regressor(column({1}), vec({4}), {0.1, 0.0});
  CHECK(one.predict(vec({7})) == doctest::Approx(4));
  const auto flat = train_regressor(column({0, 1, 2}), vec({3, 3, 3}), {0.1, 1e-2});
  CHECK(flat.predict(vec({10})) == doctest::Approx(3));
  CHECK(kind_of([] { train_regressor(column({1, 1}), vec({1, 2}), {0.1, 0.0}); }) == ErrorKind::singular_system);
  CHECK(kind_of([] { train_regressor(column({1, 2}), vec({1}), {0.1, 0.1}); }) == ErrorKind::dimension_mismatch);
  CHECK(kind_of([] { train_regressor(column({1, 2}), vec({1, 2}), {-1, 0.1}); }) == ErrorKind::invalid_params);
}

TEST_CASE("classifier separates two clusters") {
  const auto x = column({0, 0.1, 5, 5.1});
  const auto m = train_classifier(x, vec({1, 1, -1, -1}), {0.5, 1e-2});
  CHECK(m.predict(x.row(0).transpose()) > 0);
  CHECK(m.predict(x.row(1).transpose()) > 0);
  CHECK(m.predict(x.row(2).transpose()) < 0);
  CHECK(m.predict(x.row(3).transpose()) < 0);
  CHECK(kind_of([&] { train_classifier(x, vec({1, 0, -1, -1}), {0.5, 1e-2}); }) == ErrorKind::invalid_params);

  const auto e = train_ordinal(x, vec({2, 2, 9, 9}), {5}, {0.5, 1e-2});
  REQUIRE(e.cutoffs == std::vector<int>{5});
  const auto s0 = e.scores(x.row(0).transpose());
  const auto s3 = e.scores(x.row(3).transpose());
  CHECK(s0[0] > 0);
  CHECK(s3[0] < 0);
  CHECK(e.sigmas[0] > 0);
  CHECK(kind_of([&] { e.predict(x.row(0).transpose()); }) == ErrorKind::too_few_cutoffs);
}

TEST_CASE("ordinal decision rule") {
  const std::vector<int> c = {2, 3, 4, 5};
  const std::vector<double> rising = {-3, -1, 1, 3};
  CHECK(ordinal_decision(c, rising, 2, 16) == doctest::Approx(3.5));
  // quadratic with the ascending root inside the range
  const std::vector<int> c5 = {3, 4, 5, 6, 7};
  std::vector<double> q;
  for (int k : c5) q.push_back((k - 4.25) * (k + 1.0) / 10);
  CHECK(ordinal_decision(c5, q, 2, 16) == doctest::Approx(4.25).epsilon(1e-9));
  const std::vector<double> all_pos = {1, 2, 3, 4};
  CHECK(ordinal_decision(c, all_pos, 2, 16) == 2);
  const std::vector<double> all_neg = {-4, -3, -2, -1};
  CHECK(ordinal_decision(c, all_neg, 2, 16) == 16);
  const std::vector<double> falling = {3, 1, -1, -3};
  CHECK(ordinal_decision(c, falling, 2, 16) == 16);
  CHECK(kind_of([] {
          const std::vector<int> two = {2, 3};
          const std::vector<double> d = {-1, 1};
          ordinal_decision(two, d, 2, 16);
        }) == ErrorKind::too_few_cutoffs);
}

TEST_CASE("ordinal training drops uninformative cutoffs") {
  const auto x = column({0, 1, 2, 3});
  const auto e = train_ordinal(x, vec({5, 6, 7, 8}), {3, 4, 5, 6, 7}, {0.5, 1e-2});
  CHECK(e.cutoffs == std::vector<int>{6, 7});
  CHECK(e.warnings.size() == 3);
  CHECK(e.min_label == 5);
  CHECK(e.max_label == 7);
  for (double s : e.sigmas) CHECK(s > 0);
  CHECK(kind_of([&] { train_ordinal(x, vec({5, 5, 5, 5}), {3, 4, 5}, {0.5, 1e-2}); }) == ErrorKind::degenerate_labels);
  CHECK(kind_of([&] { train_ordinal(x, vec({5, 6, 7, 8}), {4, 3}, {0.5, 1e-2}); }) == ErrorKind::invalid_params);
}

TEST_CASE("ordinal ensemble tracks a monotone target") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic(80, 1, x, y);
  const auto model = fit_ordinal_model(x, y, default_cutoffs(), {0.3, 1e-2});
  Eigen::MatrixXd xt;
  Eigen::VectorXd yt;
  synthetic(40, 2, xt, yt);
  std::vector<double> pred, truth;
  for (Eigen::Index i = 0; i < xt.rows(); ++i) {
    const std::vector<double> row = {xt(i, 0), xt(i, 1)};
    pred.push_back(model.predict(row));
    truth.push_back(yt[i]);
  }
  CHECK(median_abs_err(pred, truth) < 1.5);
  CHECK(pearson_r(pred, truth) > 0.8);
}

TEST_CASE("predictions are invariant under feature shifts") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic(40, 3, x, y);
  const Eigen::MatrixXd shifted = x.array() + 10.0;
  const auto a = fit_ordinal_model(x, y, default_cutoffs(), {0.3, 1e-2});
  const auto b = fit_ordinal_model(shifted, y, default_cutoffs(), {0.3, 1e-2});
  const auto ra = fit_regression_model(x, y, {0.3, 1e-2});
  const auto rb = fit_regression_model(shifted, y, {0.3, 1e-2});
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const std::vector<double> r0 = {x(i, 0), x(i, 1)}, r1 = {shifted(i, 0), shifted(i, 1)};
    CHECK(a.predict(r0) == doctest::Approx(b.predict(r1)).epsilon(1e-8));
    CHECK(ra.predict(r0) == doctest::Approx(rb.predict(r1)).epsilon(1e-8));
  }
}

TEST_CASE("metrics") {
  const std::vector<double> a = {1, 2, 3}, b = {2, 4, 6}, c = {3, 2, 1};
  CHECK(pearson_r(a, b) == doctest::Approx(1));
  CHECK(pearson_r(a, c) == doctest::Approx(-1));
  const std::vector<double> k = {5, 5, 5};
  CHECK(kind_of([&] { pearson_r(a, k); }) == ErrorKind::constant_input);
  const std::vector<double> t = {1, 3, 6};
  CHECK(median_abs_err(a, t) == 1);
  const std::vector<double> p4 = {0, 0, 0, 0}, t4 = {0, 1, 2, 3};
  CHECK(median_abs_err(p4, t4) == 1.5);
}

TEST_CASE("model persistence round-trip") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic(30, 4, x, y);
  for (const auto& model : {fit_regression_model(x, y, {0.3, 1e-2}), fit_ordinal_model(x, y, default_cutoffs(), {0.3, 1e-2})}) {
    std::stringstream buf;
    model.save(buf);
    const auto back = PminModel::load(buf);
    CHECK(back.kind == model.kind);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const std::vector<double> row = {x(i, 0) + 0.01, x(i, 1)};
      CHECK(std::abs(back.predict(row) - model.predict(row)) <= 1e-9);
    }
  }
  std::stringstream junk("not a model");
  CHECK(kind_of([&] { PminModel::load(junk); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { PminModel::load_file("/nonexistent/model"); }) == ErrorKind::io_error);
}

TEST_CASE("stratified folds and cross-validation") {
  std::vector<std::string> strata;
  for (int i = 0; i < 23; ++i) strata.push_back(i % 3 == 0 ? "a" : "b");
  const auto folds = stratified_folds(strata, 4, 7);
  std::map<int, int> count;
  std::map<std::pair<std::string, int>, int> per;
  for (std::size_t i = 0; i < folds.size(); ++i) {
    ++count[folds[i]];
    ++per[{strata[i], folds[i]}];
  }
  CHECK(count.size() == 4);
  for (const auto& [f, c] : count) CHECK((c == 5 || c == 6));
  for (int f = 0; f < 4; ++f) CHECK(per[{"a", f}] >= 1);
  CHECK(stratified_folds(strata, 4, 7) == folds);

  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic(40, 5, x, y);
  std::vector<std::string> s(40, "all");
  const std::vector<double> gammas = {0.1, 1.0}, lambdas = {1e-3, 1e-1};
  const auto cv = cross_validate_regressor(x, y, s, 5, 1, gammas, lambdas);
  CHECK(cv.grid.size() == 4);
  double best = 1e300;
  for (const auto& e : cv.grid) best = std::min(best, e.score);
  CHECK(cv.best_score == best);
  const auto again = cross_validate_regressor(x, y, s, 5, 1, gammas, lambdas, 2);
  CHECK(again.best_score == cv.best_score);
  CHECK(again.best.gamma == cv.best.gamma);
  CHECK(kind_of([&] { cross_validate_regressor(x.topRows(3), y.head(3), std::span(s).first(3), 5, 1, gammas, lambdas); }) ==
        ErrorKind::insufficient_data);
}
