#include "qsym/reduced.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qsym/automorphism.hpp"
#include "qsym/error.hpp"

namespace qsym {

OrbitBasis build_orbit_basis(const PermGroup& group, bool include_flip, int n) {
  if (n > kMaxGenericReducedQubits)
    fail(ErrorKind::size_limit, "generic orbit basis limited to n <= " + std::to_string(kMaxGenericReducedQubits));
  return OrbitBasis{bitstring_orbits(group, include_flip, n)};
}

OrbitBasis build_orbit_basis(const Graph& g, bool include_flip) {
  if (g.num_vertices() > kMaxGenericReducedQubits)
    fail(ErrorKind::size_limit, "generic orbit basis limited to n <= " + std::to_string(kMaxGenericReducedQubits));
  return build_orbit_basis(automorphism_generators(g), include_flip, g.num_vertices());
}

ReducedOperators reduce_operators(const CostDiagonal& cost, const OrbitBasis& basis) {
  const int n = basis.num_qubits();
  if (cost.num_qubits() != n) fail(ErrorKind::dimension_mismatch, "cost and basis sizes differ");
  const auto& orbits = basis.orbits;
  const std::size_t dim = orbits.count();

  ReducedOperators ops;
  ops.n = n;
  ops.cost.resize(dim);
  ops.weight.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    ops.cost[k] = cost[orbits.representative[k]];
    ops.weight[k] = orbits.size[k];
  }
  for (std::size_t x = 0; x < orbits.orbit_of.size(); ++x)
    if (cost[x] != ops.cost[orbits.orbit_of[x]])
      fail(ErrorKind::not_invariant, "cost is not constant on orbit of " + bitstring_text(static_cast<std::uint32_t>(x), n));

  ops.mixer = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto rep = orbits.representative[k];
    for (int j = 0; j < n; ++j) {
      const auto l = orbits.orbit_of[rep ^ (1u << j)];
      ops.mixer(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) +=
          std::sqrt(ops.weight[k] / ops.weight[l]);
    }
  }
  ops.mixer = 0.5 * (ops.mixer + ops.mixer.transpose()).eval();

  const double total = std::ldexp(1.0, n);
  ops.init.resize(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) ops.init(static_cast<Eigen::Index>(k)) = std::sqrt(ops.weight[k] / total);
  return ops;
}

ReducedOperators hamming_reduced_ops(int n) {
  if (n < 1) fail(ErrorKind::invalid_params, "Hamming basis needs n >= 1");
  ReducedOperators ops;
  ops.n = n;
  const auto dim = static_cast<Eigen::Index>(n + 1);
  ops.cost.resize(static_cast<std::size_t>(n + 1));
  ops.weight.resize(static_cast<std::size_t>(n + 1));
  ops.mixer = Eigen::MatrixXd::Zero(dim, dim);
  ops.init.resize(dim);
  for (int d = 0; d <= n; ++d) {
    ops.cost[static_cast<std::size_t>(d)] = static_cast<double>(n) * d - static_cast<double>(d) * d;
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(d + 1.0) - std::lgamma(n - d + 1.0);
    ops.weight[static_cast<std::size_t>(d)] = std::round(std::exp(log_binom));
    ops.init(d) = std::exp(0.5 * (log_binom - n * std::log(2.0)));
    if (d < n) {
      const double off = std::sqrt((d + 1.0) * (n - d));
      ops.mixer(d, d + 1) = off;
      ops.mixer(d + 1, d) = off;
    }
  }
  return ops;
}

ReducedEvolver::ReducedEvolver(ReducedOperators ops) : ops_(std::move(ops)) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ops_.mixer);
  if (solver.info() != Eigen::Success) fail(ErrorKind::internal, "mixer eigendecomposition failed");
  eigenvectors_ = solver.eigenvectors();
  eigenvalues_ = solver.eigenvalues();
}

ReducedState ReducedEvolver::evolve(const Angles& angles) const {
  angles.validate();
  const auto dim = static_cast<Eigen::Index>(ops_.dim());
  Eigen::VectorXcd a = ops_.init.cast<Complex>();
  Eigen::VectorXcd b(dim);
  for (int layer = 0; layer < angles.depth(); ++layer) {
    const double gamma = angles.gammas[static_cast<std::size_t>(layer)];
    const double beta = angles.betas[static_cast<std::size_t>(layer)];
    for (Eigen::Index k = 0; k < dim; ++k) a(k) *= std::polar(1.0, -gamma * ops_.cost[static_cast<std::size_t>(k)]);
    b.noalias() = eigenvectors_.transpose().cast<Complex>() * a;
    for (Eigen::Index k = 0; k < dim; ++k) b(k) *= std::polar(1.0, -beta * eigenvalues_(k));
    a.noalias() = eigenvectors_.cast<Complex>() * b;
  }
  ReducedState out;
  out.expectation = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) out.expectation += std::norm(a(k)) * ops_.cost[static_cast<std::size_t>(k)];
  out.amplitudes = std::move(a);
  return out;
}

ReducedState reduced_evolve(const ReducedOperators& ops, const Angles& angles) {
  return ReducedEvolver(ops).evolve(angles);
}

StateVector lift(const ReducedState& state, const OrbitBasis& basis) {
  const auto& orbits = basis.orbits;
  if (static_cast<std::size_t>(state.amplitudes.size()) != orbits.count())
    fail(ErrorKind::dimension_mismatch, "reduced state and basis sizes differ");
  std::vector<Complex> amps(orbits.orbit_of.size());
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const auto k = orbits.orbit_of[x];
    amps[x] = state.amplitudes(static_cast<Eigen::Index>(k)) / std::sqrt(static_cast<double>(orbits.size[k]));
  }
  return StateVector(basis.num_qubits(), std::move(amps));
}

StateVector lift_hamming(const ReducedState& state, int n) {
  if (state.amplitudes.size() != n + 1) fail(ErrorKind::dimension_mismatch, "Hamming state must have n+1 entries");
  const auto ops = hamming_reduced_ops(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const int d = std::popcount(x);
    amps[x] = state.amplitudes(d) / std::sqrt(ops.weight[static_cast<std::size_t>(d)]);
  }
  return StateVector(n, std::move(amps));
}

}  // namespace qsym
