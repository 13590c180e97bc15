#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qsym/perm.hpp"

namespace qsym {

/// Largest qubit count for which bitstrings are enumerated explicitly.
inline constexpr int kMaxEnumeratedQubits = 20;

/// Action of a vertex permutation on an n-bit string: bit j moves to
/// position p(j). Bit j of the integer is qubit j is vertex j.
std::uint32_t permute_bits(std::uint32_t x, const Perm& p);

inline std::uint32_t global_flip(std::uint32_t x, int n) { return x ^ ((n >= 32 ? 0u : (1u << n)) - 1u); }

/// Partition of {0,1}^n into orbits. Orbits are numbered in order of their
/// smallest member, which is also the representative.
struct BitstringOrbits {
  int n = 0;
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> representative;
  std::vector<std::uint32_t> size;

  std::size_t count() const noexcept { return representative.size(); }
  std::vector<std::vector<std::uint32_t>> members() const;
};

/// Orbits of {0,1}^n under the qubit permutations of `group` and, when
/// `include_global_flip` is set, the complement map x -> x̄.
/// Throws size-limit for n > kMaxEnumeratedQubits.
BitstringOrbits bitstring_orbits(const PermGroup& group, bool include_global_flip, int n);

/// Orbits of {0,1}^n under an explicit set of bijections (each a table of
/// length 2^n). Throws not-a-bijection for a non-bijective table.
BitstringOrbits bitstring_orbits(const std::vector<std::vector<std::uint32_t>>& maps, int n);

/// Orbit count of the bitstring group <qubit perms, optional flip> computed
/// by the three routes of Burnside's lemma:
///   (1/|A|) sum_A |B^A|  =  (1/|A|) sum_x |A_x|  =  sum_x 1/|A.x|.
struct QuotientDimension {
  std::uint64_t dimension = 0;        ///< number of orbits (union-find closure)
  BigInt group_order;                 ///< |A|
  bool burnside_evaluated = false;    ///< element route ran (|A| within limit)
  BigInt fixed_point_sum;             ///< sum_A |B^A|
  BigInt stabilizer_sum;              ///< sum_x |A_x|
  std::map<std::uint64_t, std::uint64_t> inverse_orbit_terms;  ///< orbit size -> #strings; sum_x 1/|A.x|
  std::map<std::uint64_t, std::uint64_t> fixed_point_histogram;  ///< |B^A| -> #elements
  std::vector<std::uint64_t> fixed_points;  ///< per element, when |A| <= 1e6

  /// sum_x 1/|A.x| as an exact fraction numerator/denominator reduced.
  std::pair<BigInt, BigInt> inverse_orbit_sum() const;
};

struct QuotientLimits {
  std::uint64_t max_elements = 10'000'000;
  std::uint64_t max_stored_elements = 1'000'000;
};

/// Throws size-limit if neither route is feasible, verification-failed if
/// the evaluated routes disagree.
QuotientDimension quotient_dimension(const PermGroup& group, bool include_global_flip, int n,
                                     const QuotientLimits& limits = {});

/// Number of bitstrings fixed by (qubit permutation p, optionally followed
/// by the global flip), from the cycle type of p.
std::uint64_t fixed_bitstrings(const Perm& p, bool with_flip);

}  // namespace qsym
