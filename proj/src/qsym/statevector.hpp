#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsym/bitstring.hpp"
#include "qsym/graph.hpp"

namespace qsym {

using Complex = std::complex<double>;

inline constexpr int kMaxSimulatedQubits = 26;

/// Diagonal objective f(x) over n-bit strings, indexed by the integer whose
/// bit j is qubit j. Distinct values are pooled into levels so a phase
/// layer needs one complex exponential per level.
class CostDiagonal {
 public:
  CostDiagonal() = default;
  CostDiagonal(int n, std::vector<double> values);

  int num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t x) const noexcept { return values_[x]; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> levels() const noexcept { return levels_; }
  std::span<const std::uint32_t> level_of() const noexcept { return level_of_; }
  double max() const noexcept { return levels_.empty() ? 0.0 : levels_.back(); }
  double min() const noexcept { return levels_.empty() ? 0.0 : levels_.front(); }

 private:
  int n_ = 0;
  std::vector<double> values_;
  std::vector<double> levels_;
  std::vector<std::uint32_t> level_of_;
};

/// values[x] = number of edges cut by x. Throws size-limit above max_qubits.
CostDiagonal maxcut_diagonal(const Graph& g, int max_qubits = kMaxSimulatedQubits);

struct Angles {
  std::vector<double> betas;
  std::vector<double> gammas;

  int depth() const noexcept { return static_cast<int>(betas.size()); }
  /// Throws invalid-params unless lengths match and depth >= 1.
  void validate() const;
};

class StateVector {
 public:
  StateVector() = default;
  StateVector(int n, std::vector<Complex> amplitudes);

  /// |+>^{⊗n}
  static StateVector uniform(int n);
  static StateVector basis(int n, std::uint32_t x);

  int num_qubits() const noexcept { return n_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  double norm() const;

 private:
  int n_ = 0;
  std::vector<Complex> amps_;
};

/// Multiplies amplitude x by exp(-i gamma f(x)).
void apply_phase(StateVector& state, const CostDiagonal& cost, double gamma);
/// Applies exp(-i beta X_j) to every qubit j.
void apply_mixer(StateVector& state, double beta);

/// U_B(β_p)U_C(γ_p)···U_B(β_1)U_C(γ_1)|+>^{⊗n}
StateVector evolve(const CostDiagonal& cost, const Angles& angles);

double expectation(const StateVector& state, const CostDiagonal& cost);

/// Evolution restricted to the flip-symmetric half: only the 2^{n-1}
/// amplitudes with bit n-1 clear are stored. Valid for any cost with
/// f(x) = f(~x), which the constructor checks (not-invariant otherwise).
class FlipSymmetricEvolver {
 public:
  explicit FlipSymmetricEvolver(CostDiagonal cost);

  /// Stored half of the evolved state.
  std::vector<Complex> evolve(const Angles& angles) const;
  double expectation(const Angles& angles) const;
  const CostDiagonal& cost() const noexcept { return cost_; }

 private:
  CostDiagonal cost_;
};
std::vector<double> probabilities(const StateVector& state);

/// "bitstring,probability" rows; character j of the bitstring is qubit j.
std::string probabilities_csv(const StateVector& state);
std::string bitstring_text(std::uint32_t x, int n);

struct OrbitSpread {
  double probability = 0;  ///< max over orbits of (max - min) probability
  double amplitude = 0;    ///< max over orbits of max |a_x - a_rep|
};

OrbitSpread orbit_spread(const StateVector& state, const BitstringOrbits& orbits);

struct SymmetryConditions {
  bool cost_commutes = false;   ///< f(a(x)) = f(x) for all x
  bool mixer_commutes = false;  ///< {a(x^(j))}_j = {a(x)^(j)}_j for all x
};

/// Checks whether the bitstring bijection `map` commutes with the phase and
/// mixing operators. Throws not-a-bijection, size-limit for n > 16.
SymmetryConditions check_symmetry_conditions(std::span<const std::uint32_t> map, const CostDiagonal& cost);

}  // namespace qsym
