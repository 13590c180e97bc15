#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsym {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1. Edges are stored once as
/// (u, v) with u < v, sorted lexicographically. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Pairs may be given in either orientation;
  /// throws on self-loops, out-of-range endpoints and duplicates.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbor list of v.
  std::span<const int> neighbors(int v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<unsigned char> matrix_;
};

/// Edge-list text: first non-comment line is n, then one "u v" per line.
/// Lines starting with '#' and blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);

/// Removes the given edges (either orientation). Throws unknown-edge if one
/// is absent, duplicate-edge if listed twice.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

}  // namespace qsym
