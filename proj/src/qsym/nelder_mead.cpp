#include "qsym/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/error.hpp"

namespace qsym {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& opt) {
  const std::size_t d = start.size();
  if (d == 0 || lower.size() != d || upper.size() != d)
    fail(ErrorKind::dimension_mismatch, "Nelder-Mead bounds do not match the start point");

  NelderMeadResult result;
  auto clamp = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < d; ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
  };
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  clamp(start);
  std::vector<std::vector<double>> simplex(d + 1, start);
  for (std::size_t i = 0; i < d; ++i) {
    auto& v = simplex[i + 1];
    v[i] += opt.initial_step;
    if (v[i] > upper[i]) v[i] = start[i] - opt.initial_step;
    clamp(v);
  }
  std::vector<double> values(d + 1);
  for (std::size_t i = 0; i <= d; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), trial(d), trial2(d);
  auto point = [&](std::vector<double>& out, const std::vector<double>& from, double t, const std::vector<double>& to) {
    for (std::size_t i = 0; i < d; ++i) out[i] = from[i] + t * (to[i] - from[i]);
    clamp(out);
  };

  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const auto best = order.front(), worst = order.back(), second = order[d - 1];
    if (values[worst] - values[best] < opt.f_tolerance) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= opt.max_evaluations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[order[k]][i] / static_cast<double>(d);

    // Reflection: c + r (c - worst)
    point(trial, centroid, -opt.reflection, simplex[worst]);
    const double fr = eval(trial);
    if (fr < values[best]) {
      point(trial2, centroid, opt.expansion, trial);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    bool accepted = false;
    if (fr < values[worst]) {
      point(trial2, centroid, opt.contraction, trial);
      const double fc = eval(trial2);
      if (fc <= fr) {
        simplex[worst] = trial2;
        values[worst] = fc;
        accepted = true;
      }
    } else {
      point(trial2, centroid, opt.contraction, simplex[worst]);
      const double fc = eval(trial2);
      if (fc < values[worst]) {
        simplex[worst] = trial2;
        values[worst] = fc;
        accepted = true;
      }
    }
    if (!accepted) {
      for (std::size_t k = 1; k <= d; ++k) {
        auto& v = simplex[order[k]];
        point(v, simplex[best], opt.shrink, v);
        values[order[k]] = eval(v);
      }
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace qsym
