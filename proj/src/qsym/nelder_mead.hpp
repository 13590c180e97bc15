#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qsym {

struct NelderMeadOptions {
  double initial_step = 0.15;
  double f_tolerance = 1e-6;  ///< stop when max f - min f over the simplex is below this
  int max_evaluations = 500;  ///< checked between iterations; the last one may add up to d + 1 more
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` from `start`. Trial points are projected onto the box
/// [lower, upper]; an initial vertex that would leave the box steps the
/// other way.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& options = {});

}  // namespace qsym
