#include "qsym/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "qsym/error.hpp"
#include "qsym/parallel.hpp"
#include "qsym/rng.hpp"

namespace qsym {

std::array<double, kNumFeatures> SymmetryFeatures::to_array() const {
  return {log_aut, avg_log_aut_1, avg_log_aut_2, n_vertices, n_orbits,
          avg_orbits_1, avg_orbits_2, entropy, avg_entropy_1, avg_entropy_2};
}

SymmetryFeatures SymmetryFeatures::from_array(const std::array<double, kNumFeatures>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
}

const std::array<std::string_view, kNumFeatures>& SymmetryFeatures::names() {
  static const std::array<std::string_view, kNumFeatures> n = {
      "log_aut", "avg_log_aut_1", "avg_log_aut_2", "n_vertices", "n_orbits",
      "avg_orbits_1", "avg_orbits_2", "entropy", "avg_entropy_1", "avg_entropy_2"};
  return n;
}

double graph_entropy(const Partition& orbits, int n) {
  if (n <= 0) return 0.0;
  double sum = 0.0;
  for (const auto& cell : orbits.cells) {
    const auto size = static_cast<double>(cell.size());
    if (cell.size() > 1) sum += size * std::log(size);
  }
  return sum / n;
}

ExactFeatures exact_features(const Graph& g, const SearchOptions& search) {
  const auto group = automorphism_generators(g, search);
  const auto orbits = vertex_orbits(group);
  return {group.log_order(), static_cast<int>(orbits.size()), graph_entropy(orbits, g.num_vertices())};
}

namespace {

/// Pair index k in [0, m(m-1)/2) -> (i, j), i < j, row-major.
std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t k, std::size_t m) {
  std::size_t i = 0;
  std::uint64_t row = m - 1;
  while (k >= row) {
    k -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + static_cast<std::size_t>(k)};
}

std::uint64_t rank_pair(std::size_t i, std::size_t j, std::size_t m) {
  return static_cast<std::uint64_t>(i) * m - static_cast<std::uint64_t>(i) * (i + 1) / 2 + (j - i - 1);
}

std::size_t find_root(std::vector<std::uint64_t>& parent, std::uint64_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<std::uint64_t> deletion_orbits(const Graph& g, int depth, const SearchOptions& search) {
  const std::size_t m = g.num_edges();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto edges = g.edges();
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t e = 0; e < m; ++e) {
    index[static_cast<std::size_t>(edges[e].first) * n + static_cast<std::size_t>(edges[e].second)] = e;
    index[static_cast<std::size_t>(edges[e].second) * n + static_cast<std::size_t>(edges[e].first)] = e;
  }
  const std::uint64_t total = depth == 1 ? m : static_cast<std::uint64_t>(m) * (m - 1) / 2;
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](std::uint64_t a, std::uint64_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const auto group = automorphism_generators(g, search);
  for (const auto& p : group.generators()) {
    std::vector<std::size_t> image(m);
    for (std::size_t e = 0; e < m; ++e)
      image[e] = index[static_cast<std::size_t>(p(edges[e].first)) * n + static_cast<std::size_t>(p(edges[e].second))];
    if (depth == 1) {
      for (std::size_t e = 0; e < m; ++e) unite(e, image[e]);
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto a = std::min(image[i], image[j]), b = std::max(image[i], image[j]);
        unite(rank_pair(i, j, m), rank_pair(a, b, m));
      }
    }
  }
  for (std::uint64_t k = 0; k < total; ++k) parent[k] = find_root(parent, k);
  return parent;
}

ApproxFeatures approx_features(const Graph& g, int depth, const FeatureOptions& options) {
  if (depth != 1 && depth != 2) fail(ErrorKind::invalid_params, "approximate features support depth 1 or 2");
  const std::size_t m = g.num_edges();
  if (m < static_cast<std::size_t>(depth))
    fail(ErrorKind::empty_graph, "graph has fewer than " + std::to_string(depth) + " edges");

  const auto edges = g.edges();
  std::vector<std::vector<Edge>> removals;
  std::vector<double> weights;
  ApproxFeatures out;
  const std::uint64_t total = depth == 1 ? m : static_cast<std::uint64_t>(m) * (m - 1) / 2;
  const bool sample = depth == 2 && options.max_pairs > 0 && m > options.subsample_above_edges && total > options.max_pairs;
  if (sample) {
    // Uniform sample without replacement (Floyd's algorithm), sorted.
    Rng rng(options.seed);
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = total - options.max_pairs; j < total; ++j) {
      const auto t = rng.uniform_index(j + 1);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
    std::sort(picks.begin(), picks.end());
    for (auto k : picks) {
      auto [i, j] = unrank_pair(k, m);
      removals.push_back({edges[i], edges[j]});
    }
    weights.assign(removals.size(), 1.0);
    out.subsampled = true;
  } else {
    // Deletions related by an automorphism give isomorphic graphs, so one
    // representative per orbit, weighted by orbit size, suffices.
    const auto orbit = deletion_orbits(g, depth, options.search);
    std::vector<std::uint64_t> size(orbit.size(), 0);
    for (auto r : orbit) ++size[r];
    for (std::uint64_t k = 0; k < orbit.size(); ++k) {
      if (orbit[k] != k) continue;
      if (depth == 1) {
        removals.push_back({edges[k]});
      } else {
        auto [i, j] = unrank_pair(k, m);
        removals.push_back({edges[i], edges[j]});
      }
      weights.push_back(static_cast<double>(size[k]));
    }
  }

  std::vector<ExactFeatures> values(removals.size());
  parallel_for(removals.size(), options.threads, [&](std::size_t i) {
    values[i] = exact_features(delete_edges(g, removals[i]), options.search);
  });
  double count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.avg_log_aut += weights[i] * values[i].log_aut;
    out.avg_orbits += weights[i] * values[i].n_orbits;
    out.avg_entropy += weights[i] * values[i].entropy;
    count += weights[i];
  }
  out.avg_log_aut /= count;
  out.avg_orbits /= count;
  out.avg_entropy /= count;
  out.deletions = static_cast<std::uint64_t>(count);
  return out;
}

SymmetryFeatures feature_vector(const Graph& g, const FeatureOptions& options) {
  if (g.num_edges() < 2) fail(ErrorKind::empty_graph, "feature vector needs at least two edges");
  const auto exact = exact_features(g, options.search);
  const auto one = approx_features(g, 1, options);
  const auto two = approx_features(g, 2, options);
  SymmetryFeatures f;
  f.log_aut = exact.log_aut;
  f.avg_log_aut_1 = one.avg_log_aut;
  f.avg_log_aut_2 = two.avg_log_aut;
  f.n_vertices = g.num_vertices();
  f.n_orbits = exact.n_orbits;
  f.avg_orbits_1 = one.avg_orbits;
  f.avg_orbits_2 = two.avg_orbits;
  f.entropy = exact.entropy;
  f.avg_entropy_1 = one.avg_entropy;
  f.avg_entropy_2 = two.avg_entropy;
  return f;
}

}  // namespace qsym
