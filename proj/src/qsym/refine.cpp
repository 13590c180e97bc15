#include "qsym/refine.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/error.hpp"
#include "qsym/rng.hpp"

namespace qsym {

int Coloring::num_colors() const {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<std::vector<int>> Coloring::cells() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_colors()));
  for (std::size_t v = 0; v < colors.size(); ++v) out[static_cast<std::size_t>(colors[v])].push_back(static_cast<int>(v));
  return out;
}

namespace {

/// Renumbers arbitrary integer colors to 0..k-1 preserving order.
std::vector<int> normalize(std::span<const int> colors) {
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
  return out;
}

}  // namespace

Coloring color_refine(const Graph& g, const Coloring& init) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (init.colors.size() != n) fail(ErrorKind::dimension_mismatch, "coloring size differs from vertex count");

  std::vector<int> colors = normalize(init.colors);
  int k = n ? *std::max_element(colors.begin(), colors.end()) + 1 : 0;

  std::vector<std::vector<int>> signature(n);
  std::vector<int> order(n);
  while (k < static_cast<int>(n)) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colors[v]);
      for (int w : g.neighbors(static_cast<int>(v))) sig.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return signature[static_cast<std::size_t>(a)] < signature[static_cast<std::size_t>(b)];
    });
    std::vector<int> next(n);
    int id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && signature[static_cast<std::size_t>(order[i])] != signature[static_cast<std::size_t>(order[i - 1])]) ++id;
      next[static_cast<std::size_t>(order[i])] = id;
    }
    const int next_k = n ? id + 1 : 0;
    colors.swap(next);
    if (next_k == k) break;
    k = next_k;
  }
  return Coloring{std::move(colors)};
}

Coloring individualize(const Coloring& c, int v) {
  std::vector<int> keys(c.colors.size());
  for (std::size_t u = 0; u < c.colors.size(); ++u)
    keys[u] = 2 * c.colors[u] + (static_cast<int>(u) == v ? 0 : 1);
  return Coloring{normalize(keys)};
}

std::uint64_t quotient_hash(const Graph& g, const Coloring& equitable) {
  const int k = equitable.num_colors();
  std::vector<int> representative(static_cast<std::size_t>(k), -1);
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(k), 0);
  for (std::size_t v = 0; v < equitable.colors.size(); ++v) {
    const auto c = static_cast<std::size_t>(equitable.colors[v]);
    if (representative[c] < 0) representative[c] = static_cast<int>(v);
    ++sizes[c];
  }
  std::uint64_t h = mix64(static_cast<std::uint64_t>(k));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k));
  for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
    h = mix64(h ^ sizes[c]);
    std::fill(counts.begin(), counts.end(), 0);
    for (int w : g.neighbors(representative[c])) ++counts[static_cast<std::size_t>(equitable.colors[static_cast<std::size_t>(w)])];
    for (std::size_t d = 0; d < counts.size(); ++d)
      if (counts[d]) h = mix64(h ^ (d << 32) ^ counts[d]);
  }
  return h;
}

}  // namespace qsym
