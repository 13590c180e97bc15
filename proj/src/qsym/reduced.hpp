#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qsym/bitstring.hpp"
#include "qsym/graph.hpp"
#include "qsym/perm.hpp"
#include "qsym/statevector.hpp"

namespace qsym {

inline constexpr int kMaxGenericReducedQubits = 16;

/// Orbit-sum basis |o_k> = |orbit_k|^{-1/2} sum_{x in orbit_k} |x>.
struct OrbitBasis {
  BitstringOrbits orbits;

  int num_qubits() const noexcept { return orbits.n; }
  std::size_t dim() const noexcept { return orbits.count(); }
};

/// Basis from the bitstring orbits of Aut(g), optionally joined with the
/// global flip. Throws size-limit for n > 16.
OrbitBasis build_orbit_basis(const Graph& g, bool include_flip);
OrbitBasis build_orbit_basis(const PermGroup& group, bool include_flip, int n);

/// QAOA operators restricted to a symmetric subspace.
struct ReducedOperators {
  int n = 0;
  std::vector<double> cost;     ///< f on each basis state
  Eigen::MatrixXd mixer;        ///< <o_k| sum_j X_j |o_l>
  Eigen::VectorXd init;         ///< |+>^{⊗n} in this basis
  std::vector<double> weight;   ///< number of bitstrings per basis state

  std::size_t dim() const noexcept { return cost.size(); }
};

/// Projects the phase and mixing operators onto `basis`. Throws
/// not-invariant when f is not constant on some orbit.
ReducedOperators reduce_operators(const CostDiagonal& cost, const OrbitBasis& basis);

/// Complete-graph MaxCut in the Hamming-weight basis |d>, d = 0..n:
/// f(d) = n d - d^2, B|d> = sqrt(d(n-d+1))|d-1> + sqrt((d+1)(n-d))|d+1>.
ReducedOperators hamming_reduced_ops(int n);

struct ReducedState {
  Eigen::VectorXcd amplitudes;
  double expectation = 0;
};

/// Evolution in a reduced basis. The mixer exponential uses an
/// eigendecomposition computed once at construction.
class ReducedEvolver {
 public:
  explicit ReducedEvolver(ReducedOperators ops);

  const ReducedOperators& ops() const noexcept { return ops_; }
  std::size_t dim() const noexcept { return ops_.dim(); }

  ReducedState evolve(const Angles& angles) const;
  double expectation(const Angles& angles) const { return evolve(angles).expectation; }

 private:
  ReducedOperators ops_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd eigenvalues_;
};

ReducedState reduced_evolve(const ReducedOperators& ops, const Angles& angles);

/// Expands reduced amplitudes to the full 2^n statevector (a_k/sqrt|orbit_k|
/// on every member).
StateVector lift(const ReducedState& state, const OrbitBasis& basis);
StateVector lift_hamming(const ReducedState& state, int n);

}  // namespace qsym
