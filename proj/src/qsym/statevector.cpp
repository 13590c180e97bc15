#include "qsym/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <sstream>

#include "qsym/error.hpp"

namespace qsym {

CostDiagonal::CostDiagonal(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n < 0 || n > 30 || values_.size() != (std::size_t{1} << n))
    fail(ErrorKind::dimension_mismatch, "cost diagonal length must be 2^n");
  for (double v : values_)
    if (!std::isfinite(v)) fail(ErrorKind::invalid_params, "cost values must be finite");
  levels_ = values_;
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  level_of_.resize(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x)
    level_of_[x] = static_cast<std::uint32_t>(std::lower_bound(levels_.begin(), levels_.end(), values_[x]) - levels_.begin());
}

CostDiagonal maxcut_diagonal(const Graph& g, int max_qubits) {
  const int n = g.num_vertices();
  if (n > max_qubits || n > 30)
    fail(ErrorKind::size_limit, "MaxCut diagonal limited to " + std::to_string(max_qubits) + " qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> values(dim, 0.0);
  for (std::size_t x = 0; x < dim; ++x) {
    int cut = 0;
    for (auto [u, v] : g.edges()) cut += static_cast<int>(((x >> u) ^ (x >> v)) & 1u);
    values[x] = cut;
  }
  return CostDiagonal(n, std::move(values));
}

void Angles::validate() const {
  if (betas.size() != gammas.size()) fail(ErrorKind::invalid_params, "beta and gamma schedules differ in length");
  if (betas.empty()) fail(ErrorKind::invalid_params, "QAOA depth must be at least 1");
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n < 0 || n > 30 || amps_.size() != (std::size_t{1} << n))
    fail(ErrorKind::dimension_mismatch, "state vector length must be 2^n");
}

StateVector StateVector::uniform(int n) {
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(n, std::vector<Complex>(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

StateVector StateVector::basis(int n, std::uint32_t x) {
  std::vector<Complex> a(std::size_t{1} << n);
  a.at(x) = 1.0;
  return StateVector(n, std::move(a));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void apply_phase(StateVector& state, const CostDiagonal& cost, double gamma) {
  const auto levels = cost.levels();
  std::vector<Complex> phase(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) phase[k] = std::polar(1.0, -gamma * levels[k]);
  auto amps = state.amplitudes();
  const auto level_of = cost.level_of();
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] *= phase[level_of[x]];
}

void apply_mixer(StateVector& state, double beta) {
  const double c = std::cos(beta), s = std::sin(beta);
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  for (int j = 0; j < state.num_qubits(); ++j) {
    const std::size_t stride = std::size_t{1} << j;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
      for (std::size_t x = block; x < block + stride; ++x) {
        const Complex a = amps[x], b = amps[x + stride];
        // [c, -is; -is, c]
        amps[x] = Complex(c * a.real() + s * b.imag(), c * a.imag() - s * b.real());
        amps[x + stride] = Complex(c * b.real() + s * a.imag(), c * b.imag() - s * a.real());
      }
    }
  }
}

StateVector evolve(const CostDiagonal& cost, const Angles& angles) {
  angles.validate();
  auto state = StateVector::uniform(cost.num_qubits());
  for (int layer = 0; layer < angles.depth(); ++layer) {
    apply_phase(state, cost, angles.gammas[static_cast<std::size_t>(layer)]);
    apply_mixer(state, angles.betas[static_cast<std::size_t>(layer)]);
  }
  return state;
}

double expectation(const StateVector& state, const CostDiagonal& cost) {
  if (state.num_qubits() != cost.num_qubits()) fail(ErrorKind::dimension_mismatch, "state and cost sizes differ");
  const auto amps = state.amplitudes();
  double e = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) e += std::norm(amps[x]) * cost[x];
  return e;
}

FlipSymmetricEvolver::FlipSymmetricEvolver(CostDiagonal cost) : cost_(std::move(cost)) {
  if (cost_.num_qubits() < 1) fail(ErrorKind::invalid_params, "need at least one qubit");
  const std::size_t mask = cost_.size() - 1;
  for (std::size_t x = 0; x < cost_.size() / 2; ++x)
    if (cost_[x] != cost_[x ^ mask]) fail(ErrorKind::not_invariant, "cost is not invariant under the global flip");
}

std::vector<Complex> FlipSymmetricEvolver::evolve(const Angles& angles) const {
  angles.validate();
  const int n = cost_.num_qubits();
  const std::size_t half = cost_.size() / 2;
  std::vector<Complex> amps(half, Complex(1.0 / std::sqrt(static_cast<double>(cost_.size())), 0.0));
  const auto levels = cost_.levels();
  const auto level_of = cost_.level_of();
  std::vector<Complex> phase(levels.size());
  for (int layer = 0; layer < angles.depth(); ++layer) {
    const double gamma = angles.gammas[static_cast<std::size_t>(layer)];
    const double beta = angles.betas[static_cast<std::size_t>(layer)];
    for (std::size_t k = 0; k < levels.size(); ++k) phase[k] = std::polar(1.0, -gamma * levels[k]);
    for (std::size_t x = 0; x < half; ++x) amps[x] *= phase[level_of[x]];

    const double c = std::cos(beta), s = std::sin(beta);
    for (int j = 0; j + 1 < n; ++j) {
      const std::size_t stride = std::size_t{1} << j;
      for (std::size_t block = 0; block < half; block += 2 * stride) {
        for (std::size_t x = block; x < block + stride; ++x) {
          const Complex a = amps[x], b = amps[x + stride];
          amps[x] = Complex(c * a.real() + s * b.imag(), c * a.imag() - s * b.real());
          amps[x + stride] = Complex(c * b.real() + s * a.imag(), c * b.imag() - s * a.real());
        }
      }
    }
    // Qubit n-1: the partner x | top equals the flip of x ^ (half - 1).
    const std::size_t mask = half - 1;
    if (half == 1) {
      amps[0] *= Complex(c, -s);
      continue;
    }
    for (std::size_t x = 0; x < half / 2; ++x) {
      const Complex a = amps[x], b = amps[x ^ mask];
      amps[x] = Complex(c * a.real() + s * b.imag(), c * a.imag() - s * b.real());
      amps[x ^ mask] = Complex(c * b.real() + s * a.imag(), c * b.imag() - s * a.real());
    }
  }
  return amps;
}

double FlipSymmetricEvolver::expectation(const Angles& angles) const {
  const auto amps = evolve(angles);
  double e = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) e += std::norm(amps[x]) * cost_[x];
  return 2.0 * e;
}

std::vector<double> probabilities(const StateVector& state) {
  const auto amps = state.amplitudes();
  std::vector<double> p(amps.size());
  for (std::size_t x = 0; x < amps.size(); ++x) p[x] = std::norm(amps[x]);
  return p;
}

std::string bitstring_text(std::uint32_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j)
    if ((x >> j) & 1u) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

std::string probabilities_csv(const StateVector& state) {
  std::ostringstream out;
  out.precision(17);
  out << "bitstring,probability\n";
  const auto p = probabilities(state);
  for (std::size_t x = 0; x < p.size(); ++x)
    out << bitstring_text(static_cast<std::uint32_t>(x), state.num_qubits()) << ',' << p[x] << '\n';
  return out.str();
}

OrbitSpread orbit_spread(const StateVector& state, const BitstringOrbits& orbits) {
  if (orbits.n != state.num_qubits()) fail(ErrorKind::dimension_mismatch, "orbits and state sizes differ");
  const auto amps = state.amplitudes();
  const auto k = orbits.count();
  std::vector<double> pmin(k, 2.0), pmax(k, -1.0);
  OrbitSpread spread;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const auto o = orbits.orbit_of[x];
    const double p = std::norm(amps[x]);
    pmin[o] = std::min(pmin[o], p);
    pmax[o] = std::max(pmax[o], p);
    spread.amplitude = std::max(spread.amplitude, std::abs(amps[x] - amps[orbits.representative[o]]));
  }
  for (std::size_t o = 0; o < k; ++o) spread.probability = std::max(spread.probability, pmax[o] - pmin[o]);
  return spread;
}

SymmetryConditions check_symmetry_conditions(std::span<const std::uint32_t> map, const CostDiagonal& cost) {
  const int n = cost.num_qubits();
  if (n > 16) fail(ErrorKind::size_limit, "symmetry condition check limited to n <= 16");
  const std::size_t dim = std::size_t{1} << n;
  if (map.size() != dim) fail(ErrorKind::dimension_mismatch, "bitstring map has wrong length");
  std::vector<char> hit(dim, 0);
  for (auto y : map) {
    if (y >= dim || hit[y]) fail(ErrorKind::not_a_bijection, "bitstring map is not a bijection");
    hit[y] = 1;
  }

  SymmetryConditions out{true, true};
  std::vector<std::uint32_t> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
  for (std::size_t x = 0; x < dim && (out.cost_commutes || out.mixer_commutes); ++x) {
    if (cost[map[x]] != cost[x]) out.cost_commutes = false;
    if (!out.mixer_commutes) continue;
    for (int j = 0; j < n; ++j) {
      lhs[static_cast<std::size_t>(j)] = map[x ^ (std::size_t{1} << j)];
      rhs[static_cast<std::size_t>(j)] = map[x] ^ (1u << j);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) out.mixer_commutes = false;
  }
  return out;
}

}  // namespace qsym
