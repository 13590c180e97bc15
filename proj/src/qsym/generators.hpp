#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

/// A reproducible graph recipe.
///
/// Parameter conventions (all counts are vertex counts unless noted):
///   complete [n], complete-bipartite [a, b], cycle [n], star [n] (K_{1,n-1}), wheel [n] (hub + C_{n-1}),
///   ladder [k] (2 x k grid), circular-ladder [k] (prism on 2k vertices),
///   antiprism [k] (2k vertices), grid2d [a, b] or [a, b, periodic],
///   random-regular [n, k], trivial-aut [n, extra_edges],
///   hand-picked: `label` names a bundled graph, custom: `label` is a path.
struct GraphFamily {
  std::string name;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;
  std::string label;
};

/// Builds the graph described by `family`. Deterministic in
/// (name, params, seed, label). Throws invalid-params for impossible
/// parameter combinations.
Graph generate(const GraphFamily& family);

/// Names of every family accepted by generate().
const std::vector<std::string>& family_names();

/// Names of the bundled hand-picked graphs.
std::vector<std::string> handpicked_names();
Graph handpicked(std::string_view name);

/// Random k-regular graph by stub pairing: simple pairs are kept and the
/// leftover stubs re-paired until done; dead ends restart, disconnected
/// samples are rejected (up to 1000 attempts).
Graph random_regular(int n, int k, std::uint64_t seed);

/// Random connected graph (random tree plus `extra_edges` random chords)
/// resampled until its automorphism group is trivial.
Graph random_asymmetric(int n, int extra_edges, std::uint64_t seed);

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_graphs();
}

}  // namespace qsym
