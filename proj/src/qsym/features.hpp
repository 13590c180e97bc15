#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qsym/automorphism.hpp"
#include "qsym/graph.hpp"
#include "qsym/perm.hpp"

namespace qsym {

inline constexpr std::size_t kNumFeatures = 10;

/// The ten symmetry features, in record order.
struct SymmetryFeatures {
  double log_aut = 0;
  double avg_log_aut_1 = 0;
  double avg_log_aut_2 = 0;
  double n_vertices = 0;
  double n_orbits = 0;
  double avg_orbits_1 = 0;
  double avg_orbits_2 = 0;
  double entropy = 0;
  double avg_entropy_1 = 0;
  double avg_entropy_2 = 0;

  std::array<double, kNumFeatures> to_array() const;
  static SymmetryFeatures from_array(const std::array<double, kNumFeatures>& values);
  static const std::array<std::string_view, kNumFeatures>& names();
};

struct ExactFeatures {
  double log_aut = 0;
  int n_orbits = 0;
  double entropy = 0;
};

struct ApproxFeatures {
  double avg_log_aut = 0;
  double avg_orbits = 0;
  double avg_entropy = 0;
  std::uint64_t deletions = 0;  ///< number of edge sets averaged over
  bool subsampled = false;
};

struct FeatureOptions {
  SearchOptions search;
  /// Two-edge averaging samples at most this many pairs when the graph has
  /// more than `subsample_above_edges` edges; 0 keeps the exact average.
  std::uint64_t max_pairs = 0;
  std::size_t subsample_above_edges = 60;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// (1/n) * sum_i |A_i| ln |A_i|
double graph_entropy(const Partition& orbits, int n);

ExactFeatures exact_features(const Graph& g, const SearchOptions& search = {});

/// Orbit label (smallest member) of every deleted edge set of the given
/// size under Aut(G): edge indices for depth 1, pair ranks (row-major,
/// i < j) for depth 2.
std::vector<std::uint64_t> deletion_orbits(const Graph& g, int depth, const SearchOptions& search = {});

/// Mean of exact_features over all graphs with `depth` (1 or 2) edges removed.
ApproxFeatures approx_features(const Graph& g, int depth, const FeatureOptions& options = {});

SymmetryFeatures feature_vector(const Graph& g, const FeatureOptions& options = {});

}  // namespace qsym
