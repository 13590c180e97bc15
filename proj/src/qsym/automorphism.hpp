#pragma once

#include <cstdint>

#include "qsym/graph.hpp"
#include "qsym/perm.hpp"

namespace qsym {

struct SearchOptions {
  /// Maximum number of refined search-tree nodes before giving up.
  std::uint64_t node_budget = 10'000'000;
};

/// Generators of Aut(g) by individualization-refinement backtracking.
///
/// The first path (target cell = first smallest non-singleton cell, smallest
/// vertex individualized) fixes a base. Levels are then revisited bottom-up;
/// at each level every cell member outside the known orbit of the base point
/// is tried and its subtree searched for a leaf equivalent to the first one.
/// The generators found form a strong generating set for that base, so the
/// returned group's order comes straight from the basic orbits.
///
/// Throws search-budget-exceeded when more than `node_budget` nodes are refined.
PermGroup automorphism_generators(const Graph& g, const SearchOptions& options = {});

/// True iff (u,v) in E <=> (p(u),p(v)) in E.
bool is_automorphism(const Graph& g, const Perm& p);

}  // namespace qsym
