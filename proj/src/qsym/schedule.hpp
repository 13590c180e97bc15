#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qsym/graph.hpp"
#include "qsym/nelder_mead.hpp"
#include "qsym/reduced.hpp"
#include "qsym/statevector.hpp"

namespace qsym {

/// Angles varying affinely with the layer index, parameterized by their
/// endpoint values.
struct LinearSchedule {
  int p = 1;
  double beta_start = 0;
  double beta_end = 0;
  double gamma_start = 0;
  double gamma_end = 0;

  /// Per-layer increments; zero for p = 1.
  double beta_slope() const noexcept { return p > 1 ? (beta_end - beta_start) / (p - 1) : 0.0; }
  double gamma_slope() const noexcept { return p > 1 ? (gamma_end - gamma_start) / (p - 1) : 0.0; }
};

/// β_j = beta_start + (j-1)/(p-1) (beta_end - beta_start), γ likewise;
/// p = 1 gives (beta_start, gamma_start).
Angles expand(const LinearSchedule& s);

inline constexpr double kBetaMax = 3.14159265358979323846;
inline constexpr double kGammaMax = 2 * 3.14159265358979323846;

/// Exact maximum cut by Gray-code enumeration of 2^{n-1} assignments.
std::int64_t max_cut_brute(const Graph& g, int max_vertices = kMaxSimulatedQubits);

enum class SimulationMode { automatic, full, reduced };

/// ⟨C⟩ and approximation ratio for a fixed graph. In automatic mode a
/// complete graph uses the Hamming basis, other graphs with n <= 16 use the
/// Aut(G) x Z2 orbit basis when 2 dim^2 < n 2^n, and everything else the
/// full statevector (flip-symmetric half).
class QaoaEvaluator {
 public:
  explicit QaoaEvaluator(const Graph& g, SimulationMode mode = SimulationMode::automatic);

  double expectation(const Angles& angles) const;
  double ratio(const LinearSchedule& s) const { return expectation(expand(s)) / static_cast<double>(max_cut_); }
  std::int64_t max_cut() const noexcept { return max_cut_; }
  bool uses_reduced() const noexcept { return reduced_ != nullptr; }
  std::size_t simulated_dimension() const noexcept;

 private:
  int n_ = 0;
  std::int64_t max_cut_ = 0;
  std::shared_ptr<const FlipSymmetricEvolver> full_;
  std::shared_ptr<const ReducedEvolver> reduced_;
};

double approx_ratio(const Graph& g, const LinearSchedule& s, SimulationMode mode = SimulationMode::automatic);

struct OptimizeOptions {
  NelderMeadOptions local;
  /// Optional extra start tried before the random ones (restart index 0).
  std::optional<LinearSchedule> warm_start;
  unsigned threads = 1;
};

struct OptimizeResult {
  LinearSchedule schedule;
  double ratio = 0;
  int evaluations = 0;
  int best_start = 0;
};

/// Best of `restarts` Nelder-Mead runs over (beta_start, beta_end,
/// gamma_start, gamma_end) in [0,π]^2 x [0,2π]^2. Start r draws from
/// its own stream derive_seed(seed, r), so results are deterministic and
/// adding restarts never lowers the ratio. Ties go to the lowest start.
OptimizeResult optimize_linear(const QaoaEvaluator& evaluator, int p, int restarts, std::uint64_t seed,
                               const OptimizeOptions& options = {});
OptimizeResult optimize_linear(const Graph& g, int p, int restarts, std::uint64_t seed,
                               const OptimizeOptions& options = {});

struct PminOptions {
  double target_ratio = 0.95;
  int p_start = 2;
  int p_cap = 25;
  int restarts = 50;
  std::uint64_t seed = 0;
  NelderMeadOptions local;
  /// Seed each depth with the previous depth's best schedule.
  bool warm_start = true;
  unsigned threads = 1;
  SimulationMode mode = SimulationMode::automatic;
};

struct PminTraceEntry {
  int p = 0;
  double best_ratio = 0;
  LinearSchedule schedule;
};

struct PminResult {
  std::optional<int> p_min;  ///< empty when censored at p_cap
  double ratio_achieved = 0;
  LinearSchedule best_schedule;
  std::int64_t optimum_cut = 0;
  std::vector<PminTraceEntry> trace;

  bool censored() const noexcept { return !p_min.has_value(); }
};

/// Smallest p in [p_start, p_cap] whose optimized linear schedule reaches
/// target_ratio.
PminResult find_pmin(const Graph& g, const PminOptions& options);
PminResult find_pmin(const QaoaEvaluator& evaluator, const PminOptions& options);

}  // namespace qsym
