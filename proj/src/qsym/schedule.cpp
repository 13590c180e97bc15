#include "qsym/schedule.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "qsym/automorphism.hpp"
#include "qsym/error.hpp"
#include "qsym/parallel.hpp"
#include "qsym/rng.hpp"

namespace qsym {

Angles expand(const LinearSchedule& s) {
  if (s.p < 1) fail(ErrorKind::invalid_params, "schedule depth must be at least 1");
  Angles a;
  a.betas.resize(static_cast<std::size_t>(s.p));
  a.gammas.resize(static_cast<std::size_t>(s.p));
  for (int j = 0; j < s.p; ++j) {
    if (s.p == 1) {
      a.betas[0] = s.beta_start;
      a.gammas[0] = s.gamma_start;
      break;
    }
    const double t = static_cast<double>(j) / (s.p - 1);
    a.betas[static_cast<std::size_t>(j)] = j == s.p - 1 ? s.beta_end : s.beta_start + t * (s.beta_end - s.beta_start);
    a.gammas[static_cast<std::size_t>(j)] = j == s.p - 1 ? s.gamma_end : s.gamma_start + t * (s.gamma_end - s.gamma_start);
  }
  return a;
}

std::int64_t max_cut_brute(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 62) fail(ErrorKind::size_limit, "brute-force MaxCut limited to " + std::to_string(max_vertices) + " vertices");
  if (n < 2) return 0;
  // Vertex n-1 stays on side 0; Gray code over the rest.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::int64_t cut = 0, best = 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < count; ++i) {
    const int v = std::countr_zero(i);
    int same = 0, other = 0;
    for (int w : g.neighbors(v)) (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)] ? same : other)++;
    cut += same - other;
    side[static_cast<std::size_t>(v)] ^= 1;
    best = std::max(best, cut);
  }
  return best;
}

QaoaEvaluator::QaoaEvaluator(const Graph& g, SimulationMode mode) : n_(g.num_vertices()) {
  if (g.num_edges() == 0) fail(ErrorKind::empty_graph, "graph has no edges");
  const auto n = static_cast<std::size_t>(n_);
  const bool complete = g.num_edges() == n * (n - 1) / 2;
  max_cut_ = complete ? static_cast<std::int64_t>((n / 2) * (n - n / 2)) : max_cut_brute(g);

  if (mode != SimulationMode::full) {
    if (complete) {
      reduced_ = std::make_shared<const ReducedEvolver>(hamming_reduced_ops(n_));
      return;
    }
    if (n_ <= kMaxGenericReducedQubits) {
      const auto group = automorphism_generators(g);
      if (mode == SimulationMode::reduced || group.order() > 1) {
        auto basis = build_orbit_basis(group, true, n_);
        const double reduced_cost = 2.0 * static_cast<double>(basis.dim()) * static_cast<double>(basis.dim());
        const double full_cost = static_cast<double>(n_) * std::ldexp(1.0, n_);
        if (mode == SimulationMode::reduced || reduced_cost < full_cost) {
          reduced_ = std::make_shared<const ReducedEvolver>(reduce_operators(maxcut_diagonal(g), basis));
          return;
        }
      }
    } else if (mode == SimulationMode::reduced) {
      fail(ErrorKind::size_limit, "generic reduction limited to n <= 16");
    }
  }
  full_ = std::make_shared<const FlipSymmetricEvolver>(maxcut_diagonal(g));
}

double QaoaEvaluator::expectation(const Angles& angles) const {
  if (reduced_) return reduced_->expectation(angles);
  return full_->expectation(angles);
}

std::size_t QaoaEvaluator::simulated_dimension() const noexcept {
  return reduced_ ? reduced_->dim() : full_->cost().size() / 2;
}

double approx_ratio(const Graph& g, const LinearSchedule& s, SimulationMode mode) {
  return QaoaEvaluator(g, mode).ratio(s);
}

namespace {

constexpr std::array<double, 4> kLower = {0.0, 0.0, 0.0, 0.0};
constexpr std::array<double, 4> kUpper = {kBetaMax, kBetaMax, kGammaMax, kGammaMax};

LinearSchedule from_point(int p, std::span<const double> x) { return {p, x[0], x[1], x[2], x[3]}; }

}  // namespace

OptimizeResult optimize_linear(const QaoaEvaluator& evaluator, int p, int restarts, std::uint64_t seed,
                               const OptimizeOptions& options) {
  if (restarts < 1) fail(ErrorKind::invalid_params, "restarts must be at least 1");
  if (p < 1) fail(ErrorKind::invalid_params, "depth must be at least 1");

  std::vector<std::vector<double>> starts;
  if (options.warm_start) {
    const auto& w = *options.warm_start;
    starts.push_back({w.beta_start, w.beta_end, w.gamma_start, w.gamma_end});
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x(4);
    for (std::size_t i = 0; i < 4; ++i) x[i] = rng.uniform(kLower[i], kUpper[i]);
    starts.push_back(std::move(x));
  }

  const Objective objective = [&](std::span<const double> x) { return -evaluator.ratio(from_point(p, x)); };
  std::vector<NelderMeadResult> runs(starts.size());
  parallel_for(starts.size(), options.threads, [&](std::size_t i) {
    runs[i] = nelder_mead(objective, starts[i], kLower, kUpper, options.local);
  });

  OptimizeResult best;
  best.ratio = -1.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    best.evaluations += runs[i].evaluations;
    if (-runs[i].value > best.ratio) {
      best.ratio = -runs[i].value;
      best.schedule = from_point(p, runs[i].x);
      best.best_start = static_cast<int>(i);
    }
  }
  best.ratio = evaluator.ratio(best.schedule);
  return best;
}

OptimizeResult optimize_linear(const Graph& g, int p, int restarts, std::uint64_t seed, const OptimizeOptions& options) {
  return optimize_linear(QaoaEvaluator(g), p, restarts, seed, options);
}

PminResult find_pmin(const QaoaEvaluator& evaluator, const PminOptions& options) {
  if (!(options.target_ratio > 0.0)) fail(ErrorKind::invalid_params, "target ratio must be positive");
  if (options.p_start < 1 || options.p_cap < options.p_start) fail(ErrorKind::invalid_params, "need 1 <= p_start <= p_cap");

  PminResult result;
  result.optimum_cut = evaluator.max_cut();
  result.ratio_achieved = -1.0;
  std::optional<LinearSchedule> previous;
  for (int p = options.p_start; p <= options.p_cap; ++p) {
    OptimizeOptions opt;
    opt.local = options.local;
    opt.threads = options.threads;
    if (options.warm_start && previous) {
      opt.warm_start = *previous;
      opt.warm_start->p = p;
    }
    const auto best = optimize_linear(evaluator, p, options.restarts, derive_seed(options.seed, static_cast<std::uint64_t>(p)), opt);
    result.trace.push_back({p, best.ratio, best.schedule});
    previous = best.schedule;
    if (best.ratio > result.ratio_achieved) {
      result.ratio_achieved = best.ratio;
      result.best_schedule = best.schedule;
    }
    if (best.ratio >= options.target_ratio) {
      result.p_min = p;
      result.ratio_achieved = best.ratio;
      result.best_schedule = best.schedule;
      break;
    }
  }
  return result;
}

PminResult find_pmin(const Graph& g, const PminOptions& options) {
  return find_pmin(QaoaEvaluator(g, options.mode), options);
}

}  // namespace qsym
