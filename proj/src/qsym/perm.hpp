#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsym {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {0..n-1} in image notation: p(i) = images[i].
class Perm {
 public:
  Perm() = default;
  /// Identity on n points.
  explicit Perm(int n);
  /// Throws not-a-bijection unless `images` is a permutation of 0..n-1.
  explicit Perm(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  int num_cycles() const;
  /// Cycle lengths, in order of smallest element.
  std::vector<int> cycle_lengths() const;

  /// "σ(0) σ(1) … σ(n−1)"
  std::string to_string() const;

  /// Composition: (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

Perm parse_perm(const std::string& line);

/// Ordered partition of {0..n-1}. Cells are sorted internally and ordered
/// by smallest member; cell_of[v] indexes `cells`.
struct Partition {
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;

  std::size_t size() const noexcept { return cells.size(); }
  static Partition from_labels(std::span<const int> labels);
};

/// Permutation group given by generators, with a lazily built base and
/// strong generating set (deterministic Schreier-Sims). Copies share the
/// cache; the group is immutable.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// Identity generators and duplicates are dropped.
  PermGroup(int degree, std::vector<Perm> generators);

  /// Trusted constructor: `generators` form a strong generating set relative
  /// to `base` (as produced by the automorphism search). The stabilizer chain
  /// is built directly without Schreier generator tests.
  static PermGroup from_strong_generators(int degree, std::vector<Perm> generators, std::vector<int> base);

  int degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }

  const BigInt& order() const;
  /// Natural logarithm of the order.
  double log_order() const;
  std::vector<int> base() const;
  /// Orbit length of each base point under its stabilizer subgroup.
  std::vector<int> basic_orbit_sizes() const;

  bool contains(const Perm& g) const;

  /// Calls `visit` once per group element (in a fixed order). Throws
  /// size-limit when the order exceeds `limit`.
  void for_each_element(const std::function<void(const Perm&)>& visit, std::uint64_t limit = 10'000'000) const;
  std::vector<Perm> elements(std::uint64_t limit = 1'000'000) const;

 private:
  struct Chain;
  const Chain& chain() const;

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::shared_ptr<Chain> chain_;
};

/// Orbits of {0..n-1} under the group's generators (union-find closure).
Partition vertex_orbits(const PermGroup& group);

}  // namespace qsym
