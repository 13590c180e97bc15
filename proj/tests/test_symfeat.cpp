#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qsym/features.hpp"
#include "qsym/generators.hpp"

using namespace qsym;

namespace {

Graph family(const std::string& name, std::vector<std::int64_t> params) { return generate({name, std::move(params), 0, ""}); }

struct Triple {
  double log_aut, orbits, entropy;
};

Triple brute_exact(int n, const oracle::EdgeList& e) {
  const auto elements = oracle::automorphisms(n, e);
  const auto sizes = oracle::orbit_sizes(n, elements);
  return {std::log(static_cast<double>(elements.size())), static_cast<double>(sizes.size()), oracle::entropy_of(n, sizes)};
}

std::array<double, kNumFeatures> brute_features(const Graph& g) {
  const int n = g.num_vertices();
  const oracle::EdgeList e(g.edges().begin(), g.edges().end());
  const auto base = brute_exact(n, e);
  Triple one{0, 0, 0}, two{0, 0, 0};
  double c1 = 0, c2 = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto rest = e;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const auto t = brute_exact(n, rest);
    one = {one.log_aut + t.log_aut, one.orbits + t.orbits, one.entropy + t.entropy};
    ++c1;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto rest2 = e;
      rest2.erase(rest2.begin() + static_cast<std::ptrdiff_t>(j));
      rest2.erase(rest2.begin() + static_cast<std::ptrdiff_t>(i));
      const auto u = brute_exact(n, rest2);
      two = {two.log_aut + u.log_aut, two.orbits + u.orbits, two.entropy + u.entropy};
      ++c2;
    }
  }
  return {base.log_aut,     one.log_aut / c1,  two.log_aut / c2,    static_cast<double>(n), base.orbits,
          one.orbits / c1,  two.orbits / c2,   base.entropy,        one.entropy / c1,       two.entropy / c2};
}

void check_close(const std::array<double, kNumFeatures>& got, const std::array<double, kNumFeatures>& want) {
  for (std::size_t i = 0; i < kNumFeatures; ++i) {
    CAPTURE(i);
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("feature names are in record order") {
  const auto& names = SymmetryFeatures::names();
  CHECK(names[0] == "log_aut");
  CHECK(names[3] == "n_vertices");
  CHECK(names[9] == "avg_entropy_2");
  SymmetryFeatures f;
  f.avg_orbits_2 = 7;
  CHECK(f.to_array()[6] == 7);
  CHECK(SymmetryFeatures::from_array(f.to_array()).avg_orbits_2 == 7);
}

TEST_CASE("exact features of small graphs") {
  const auto k4 = exact_features(family("complete", {4}));
  CHECK(k4.log_aut == doctest::Approx(std::log(24.0)));
  CHECK(k4.n_orbits == 1);
  CHECK(k4.entropy == doctest::Approx(std::log(4.0)));
  const auto p3 = exact_features(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.log_aut == doctest::Approx(std::log(2.0)));
  CHECK(p3.n_orbits == 2);
  CHECK(p3.entropy == doctest::Approx(2 * std::log(2.0) / 3));
  const auto c20 = exact_features(family("cycle", {20}));
  CHECK(c20.log_aut == doctest::Approx(std::log(40.0)));
  CHECK(c20.n_orbits == 1);
  CHECK(c20.entropy == doctest::Approx(std::log(20.0)));
}

TEST_CASE("single deletions") {
  const auto k4 = approx_features(family("complete", {4}), 1);
  CHECK(k4.avg_log_aut == doctest::Approx(std::log(4.0)));
  CHECK(k4.avg_orbits == doctest::Approx(2));
  CHECK(k4.avg_entropy == doctest::Approx(std::log(2.0)));
  CHECK(k4.deletions == 6);
  for (int n = 4; n <= 9; ++n) {
    // C_n minus an edge is a path, whose only symmetry is the reversal
    CHECK(approx_features(family("cycle", {n}), 1).avg_log_aut == doctest::Approx(std::log(2.0)));
  }
  // K3 minus two edges is a single edge plus an isolated vertex
  CHECK(approx_features(family("complete", {3}), 2).avg_log_aut == doctest::Approx(std::log(2.0)));
}

TEST_CASE("complete graph on 20 vertices") {
  const auto f = feature_vector(family("complete", {20})).to_array();
  const double l2 = std::log(2.0);
  const double adjacent = 20.0 * 171, disjoint = 190.0 * 189 / 2 - adjacent;
  const double total = adjacent + disjoint;
  const std::array<double, kNumFeatures> want = {
      std::lgamma(21.0),
      l2 + std::lgamma(19.0),
      (adjacent * (l2 + std::lgamma(18.0)) + disjoint * (3 * l2 + std::lgamma(17.0))) / total,
      20,
      1,
      2,
      (adjacent * 3 + disjoint * 2) / total,
      std::log(20.0),
      (2 * l2 + 18 * std::log(18.0)) / 20,
      (adjacent * (2 * l2 + 17 * std::log(17.0)) + disjoint * (4 * std::log(4.0) + 16 * std::log(16.0))) / (20 * total)};
  check_close(f, want);
  CHECK(f[1] == doctest::Approx(37.0886).epsilon(1e-5));
  CHECK(f[6] == doctest::Approx(2.1905).epsilon(1e-4));
}

TEST_CASE("trivial-aut graphs have zero symmetry features") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = generate({"trivial-aut", {9, 0}, seed, ""});
    const auto f = exact_features(g);
    CHECK(f.log_aut == 0.0);
    CHECK(f.n_orbits == 9);
    CHECK(f.entropy == 0.0);
  }
}

TEST_CASE("feature vectors match brute-force enumeration") {
  std::mt19937_64 rng(4242);
  std::vector<Graph> graphs = {family("complete", {4}), family("cycle", {6}), family("star", {6}), family("wheel", {6}),
                               family("complete-bipartite", {3, 3}), family("ladder", {3})};
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + trial % 4;
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    if (e.size() >= 2) graphs.emplace_back(n, e);
  }
  for (const auto& g : graphs) check_close(feature_vector(g).to_array(), brute_features(g));
}

TEST_CASE("orbit-weighted averaging equals the plain average") {
  for (const auto& g : {handpicked("petersen"), family("grid2d", {3, 3}), family("wheel", {8})}) {
    const auto edges = std::vector<Edge>(g.edges().begin(), g.edges().end());
    double s1 = 0, s2 = 0, o2 = 0;
    std::uint64_t c2 = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      s1 += exact_features(delete_edges(g, std::span(&edges[i], 1))).log_aut;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const std::vector<Edge> pair = {edges[i], edges[j]};
        const auto f = exact_features(delete_edges(g, pair));
        s2 += f.log_aut;
        o2 += f.n_orbits;
        ++c2;
      }
    }
    const auto a1 = approx_features(g, 1);
    const auto a2 = approx_features(g, 2);
    CHECK(a1.avg_log_aut == doctest::Approx(s1 / static_cast<double>(edges.size())).epsilon(1e-12));
    CHECK(a2.avg_log_aut == doctest::Approx(s2 / static_cast<double>(c2)).epsilon(1e-12));
    CHECK(a2.avg_orbits == doctest::Approx(o2 / static_cast<double>(c2)).epsilon(1e-12));
    CHECK(a2.deletions == c2);
  }
}

TEST_CASE("deletion orbits") {
  const auto k4 = family("complete", {4});
  const auto d1 = deletion_orbits(k4, 1);
  CHECK(std::set<std::uint64_t>(d1.begin(), d1.end()).size() == 1);
  const auto d2 = deletion_orbits(k4, 2);
  CHECK(std::set<std::uint64_t>(d2.begin(), d2.end()).size() == 2);
  const auto star = deletion_orbits(family("star", {5}), 2);
  CHECK(std::set<std::uint64_t>(star.begin(), star.end()).size() == 1);
}

TEST_CASE("two-edge subsampling") {
  FeatureOptions opt;
  opt.max_pairs = 50;
  opt.subsample_above_edges = 10;
  opt.seed = 3;
  const auto g = handpicked("icosahedron");
  const auto a = approx_features(g, 2, opt);
  CHECK(a.subsampled);
  CHECK(a.deletions == 50);
  const auto b = approx_features(g, 2, opt);
  CHECK(a.avg_log_aut == b.avg_log_aut);
  opt.max_pairs = 0;
  CHECK_FALSE(approx_features(g, 2, opt).subsampled);
}
