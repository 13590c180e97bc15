#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

/// Vertex coloring with contiguous color ids 0..k-1. Color order is
/// meaningful: cells are ordered by color id.
struct Coloring {
  std::vector<int> colors;

  static Coloring uniform(int n) { return Coloring{std::vector<int>(static_cast<std::size_t>(n), 0)}; }

  int num_colors() const;
  std::vector<std::vector<int>> cells() const;
  bool is_discrete() const { return num_colors() == static_cast<int>(colors.size()); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Coarsest equitable refinement of `init` (1-dimensional Weisfeiler-Lehman).
/// New colors are ordered by (old color, neighbor-color multiset), so the
/// result commutes with graph isomorphisms and refines `init`. Input color
/// ids need not be contiguous; their relative order is kept.
Coloring color_refine(const Graph& g, const Coloring& init);

/// Splits v off its cell, placing {v} immediately before the remainder.
Coloring individualize(const Coloring& c, int v);

/// Isomorphism-invariant hash of an equitable coloring: cell sizes plus
/// the quotient matrix of neighbor counts between cells.
std::uint64_t quotient_hash(const Graph& g, const Coloring& equitable);

}  // namespace qsym
