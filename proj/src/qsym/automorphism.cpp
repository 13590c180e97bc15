#include "qsym/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qsym/error.hpp"
#include "qsym/refine.hpp"

namespace qsym {

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.num_vertices()) return false;
  // p is a bijection, so mapping E into E is enough for equality.
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

namespace {

int target_cell(const Coloring& c) {
  const auto cells = c.cells();
  int best = -1;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1 && (best < 0 || cells[i].size() < best_size)) {
      best = static_cast<int>(i);
      best_size = cells[i].size();
    }
  }
  return best;
}

std::vector<int> members(const Coloring& c, int color) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    if (c.colors[v] == color) out.push_back(static_cast<int>(v));
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  Search(const Graph& g, const SearchOptions& options) : g_(g), options_(options) {}

  PermGroup run() {
    const int n = g_.num_vertices();
    if (n == 0) return PermGroup(0, {});

    // First path.
    Coloring node = refine(Coloring::uniform(n));
    path_.push_back({node, quotient_hash(g_, node), -1, {}});
    while (!node.is_discrete()) {
      auto& level = path_.back();
      const int cell = target_cell(node);
      level.cell_members = members(node, cell);
      level.base_point = level.cell_members.front();
      node = refine(individualize(node, level.base_point));
      path_.push_back({node, quotient_hash(g_, node), -1, {}});
    }
    leaf_ = std::vector<int>(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) leaf_[static_cast<std::size_t>(node.colors[static_cast<std::size_t>(v)])] = v;

    // Revisit levels bottom-up.
    std::vector<int> base;
    for (std::size_t i = path_.size() - 1; i-- > 0;) {
      const auto& level = path_[i];
      UnionFind orbits(n);
      for (const auto& g : generators_)
        for (int v = 0; v < n; ++v) orbits.unite(v, g(v));
      std::vector<int> failed;
      for (int v : level.cell_members) {
        if (v == level.base_point) continue;
        if (orbits.find(v) == orbits.find(level.base_point)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](int f) { return orbits.find(f) == orbits.find(v); })) continue;
        if (auto aut = explore(refine(individualize(level.coloring, v)), i + 1)) {
          for (int u = 0; u < n; ++u) orbits.unite(u, (*aut)(u));
          generators_.push_back(std::move(*aut));
        } else {
          failed.push_back(v);
        }
      }
    }
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) base.push_back(path_[i].base_point);
    return PermGroup::from_strong_generators(n, generators_, base);
  }

 private:
  struct Level {
    Coloring coloring;
    std::uint64_t hash;
    int base_point;
    std::vector<int> cell_members;
  };

  Coloring refine(const Coloring& c) {
    if (++nodes_ > options_.node_budget)
      fail(ErrorKind::search_budget_exceeded,
           "automorphism search exceeded " + std::to_string(options_.node_budget) + " nodes");
    return color_refine(g_, c);
  }

  /// Depth-first search below `node` (at first-path depth `depth`) for a
  /// leaf whose correspondence with the first leaf is an automorphism.
  std::optional<Perm> explore(const Coloring& node, std::size_t depth) {
    const auto& reference = path_[depth];
    if (node.num_colors() != reference.coloring.num_colors() || quotient_hash(g_, node) != reference.hash)
      return std::nullopt;
    if (node.is_discrete()) {
      std::vector<int> here(leaf_.size());
      for (std::size_t v = 0; v < node.colors.size(); ++v) here[static_cast<std::size_t>(node.colors[v])] = static_cast<int>(v);
      std::vector<int> images(leaf_.size());
      for (std::size_t c = 0; c < leaf_.size(); ++c) images[static_cast<std::size_t>(leaf_[c])] = here[c];
      Perm candidate(std::move(images));
      if (is_automorphism(g_, candidate)) return candidate;
      return std::nullopt;
    }
    const int cell = target_cell(node);
    for (int u : members(node, cell)) {
      if (auto found = explore(refine(individualize(node, u)), depth + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  SearchOptions options_;
  std::uint64_t nodes_ = 0;
  std::vector<Level> path_;
  std::vector<int> leaf_;  // leaf_[color] = vertex, first leaf
  std::vector<Perm> generators_;
};

}  // namespace

PermGroup automorphism_generators(const Graph& g, const SearchOptions& options) {
  return Search(g, options).run();
}

}  // namespace qsym
