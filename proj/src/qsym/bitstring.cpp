#include "qsym/bitstring.hpp"

#include <numeric>

#include "qsym/error.hpp"

namespace qsym {

std::uint32_t permute_bits(std::uint32_t x, const Perm& p) {
  std::uint32_t y = 0;
  for (int j = 0; x; ++j, x >>= 1)
    if (x & 1u) y |= 1u << p(j);
  return y;
}

std::vector<std::vector<std::uint32_t>> BitstringOrbits::members() const {
  std::vector<std::vector<std::uint32_t>> out(count());
  for (std::size_t k = 0; k < count(); ++k) out[k].reserve(size[k]);
  for (std::uint32_t x = 0; x < orbit_of.size(); ++x) out[orbit_of[x]].push_back(x);
  return out;
}

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxEnumeratedQubits)
    fail(ErrorKind::size_limit, "explicit bitstring enumeration limited to n <= " + std::to_string(kMaxEnumeratedQubits));
}

class BitUnionFind {
 public:
  explicit BitUnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  BitstringOrbits collect(int n) {
    BitstringOrbits out;
    out.n = n;
    out.orbit_of.resize(parent_.size());
    std::vector<std::uint32_t> index_of_root(parent_.size(), UINT32_MAX);
    for (std::uint32_t x = 0; x < parent_.size(); ++x) {
      const auto r = find(x);
      if (index_of_root[r] == UINT32_MAX) {
        index_of_root[r] = static_cast<std::uint32_t>(out.representative.size());
        out.representative.push_back(x);
        out.size.push_back(0);
      }
      out.orbit_of[x] = index_of_root[r];
      ++out.size[index_of_root[r]];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

BitstringOrbits bitstring_orbits(const PermGroup& group, bool include_global_flip, int n) {
  check_size(n);
  if (group.degree() != n) fail(ErrorKind::dimension_mismatch, "group degree differs from qubit count");
  const std::uint32_t dim = 1u << n;
  BitUnionFind uf(dim);
  for (const auto& g : group.generators())
    for (std::uint32_t x = 0; x < dim; ++x) uf.unite(x, permute_bits(x, g));
  if (include_global_flip)
    for (std::uint32_t x = 0; x < dim; ++x) uf.unite(x, global_flip(x, n));
  return uf.collect(n);
}

BitstringOrbits bitstring_orbits(const std::vector<std::vector<std::uint32_t>>& maps, int n) {
  check_size(n);
  const std::uint32_t dim = 1u << n;
  BitUnionFind uf(dim);
  for (const auto& m : maps) {
    if (m.size() != dim) fail(ErrorKind::dimension_mismatch, "bitstring map has wrong length");
    std::vector<char> hit(dim, 0);
    for (auto y : m) {
      if (y >= dim || hit[y]) fail(ErrorKind::not_a_bijection, "bitstring map is not a bijection");
      hit[y] = 1;
    }
    for (std::uint32_t x = 0; x < dim; ++x) uf.unite(x, m[x]);
  }
  return uf.collect(n);
}

std::uint64_t fixed_bitstrings(const Perm& p, bool with_flip) {
  const auto cycles = p.cycle_lengths();
  if (with_flip)
    for (int len : cycles)
      if (len % 2) return 0;
  return std::uint64_t{1} << cycles.size();
}

std::pair<BigInt, BigInt> QuotientDimension::inverse_orbit_sum() const {
  BigInt num = 0, den = 1;
  for (auto [orbit_size, strings] : inverse_orbit_terms) {
    // num/den + strings/orbit_size
    num = num * orbit_size + BigInt(strings) * den;
    den *= orbit_size;
    const BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

QuotientDimension quotient_dimension(const PermGroup& group, bool include_global_flip, int n,
                                     const QuotientLimits& limits) {
  if (group.degree() != n) fail(ErrorKind::dimension_mismatch, "group degree differs from qubit count");
  QuotientDimension q;
  q.group_order = group.order() * (include_global_flip && n > 0 ? 2 : 1);

  const bool orbit_route = n <= kMaxEnumeratedQubits;
  const bool element_route = q.group_order <= limits.max_elements;
  if (!orbit_route && !element_route)
    fail(ErrorKind::size_limit, "neither orbit enumeration nor element enumeration is feasible");

  if (element_route) {
    q.burnside_evaluated = true;
    const bool store = q.group_order <= limits.max_stored_elements;
    std::uint64_t total = 0;
    group.for_each_element([&](const Perm& p) {
      for (int flip = 0; flip <= (include_global_flip && n > 0 ? 1 : 0); ++flip) {
        const auto fixed = fixed_bitstrings(p, flip == 1);
        total += fixed;
        ++q.fixed_point_histogram[fixed];
        if (store) q.fixed_points.push_back(fixed);
      }
    }, limits.max_elements);
    q.fixed_point_sum = total;
  }

  if (orbit_route) {
    const auto orbits = bitstring_orbits(group, include_global_flip, n);
    q.dimension = orbits.count();
    q.stabilizer_sum = 0;
    for (std::size_t k = 0; k < orbits.count(); ++k) {
      const auto s = orbits.size[k];
      q.inverse_orbit_terms[s] += s;
      // |A_x| = |A| / |A.x| for each of the s strings in the orbit.
      q.stabilizer_sum += (q.group_order / s) * s;
    }
    const auto [num, den] = q.inverse_orbit_sum();
    const bool agree = den == 1 && num == q.dimension && q.stabilizer_sum == q.group_order * q.dimension &&
                       (!q.burnside_evaluated || q.fixed_point_sum == q.stabilizer_sum);
    if (!agree) fail(ErrorKind::verification_failed, "Burnside routes disagree");
  } else {
    if (q.fixed_point_sum % q.group_order != 0)
      fail(ErrorKind::verification_failed, "fixed-point sum not divisible by group order");
    q.dimension = static_cast<std::uint64_t>(q.fixed_point_sum / q.group_order);
    q.stabilizer_sum = q.fixed_point_sum;
  }
  return q;
}

}  // namespace qsym
