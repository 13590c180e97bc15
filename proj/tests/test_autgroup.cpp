#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qsym/automorphism.hpp"
#include "qsym/bitstring.hpp"
#include "qsym/error.hpp"
#include "qsym/generators.hpp"
#include "qsym/perm.hpp"

using namespace qsym;

namespace {

Graph family(const std::string& name, std::vector<std::int64_t> params) { return generate({name, std::move(params), 0, ""}); }

oracle::EdgeList edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<std::uint32_t> bit_map(const std::vector<int>& p, int n, bool flip) {
  std::vector<std::uint32_t> m(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    std::uint32_t y = 0;
    for (int j = 0; j < n; ++j)
      if ((x >> j) & 1u) y |= 1u << p[static_cast<std::size_t>(j)];
    m[x] = flip ? y ^ static_cast<std::uint32_t>(m.size() - 1) : y;
  }
  return m;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm a(std::vector<int>{1, 2, 0, 3});
  const Perm b(std::vector<int>{0, 1, 3, 2});
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.cycle_lengths() == std::vector<int>{3, 1});
  CHECK(a.num_cycles() == 2);
  CHECK(parse_perm(a.to_string()) == a);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("group orders of standard graphs") {
  CHECK(automorphism_generators(family("complete-bipartite", {3, 3})).order() == 72);
  CHECK(automorphism_generators(family("cycle", {5})).order() == 10);
  CHECK(automorphism_generators(family("cycle", {20})).order() == 40);
  CHECK(automorphism_generators(family("star", {6})).order() == 120);
  CHECK(automorphism_generators(Graph(1, {})).order() == 1);
  const auto k20 = automorphism_generators(family("complete", {20}));
  CHECK(k20.log_order() == doctest::Approx(std::lgamma(21.0)).epsilon(1e-12));
  CHECK(k20.order() == BigInt("2432902008176640000"));
  const std::map<std::string, int> orders = {{"petersen", 120},  {"heawood", 336},     {"moebius-kantor", 96},
                                             {"pappus", 216},    {"desargues", 240},   {"dodecahedron", 120},
                                             {"icosahedron", 120}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    CHECK(automorphism_generators(handpicked(name)).order() == order);
  }
}

TEST_CASE("generators are automorphisms and match brute force on random graphs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    const auto g = random_graph(n, trial % 3 == 0 ? 0.3 : 0.5, rng);
    const auto group = automorphism_generators(g);
    for (const auto& gen : group.generators()) CHECK(is_automorphism(g, gen));
    const auto brute = oracle::automorphisms(n, edges_of(g));
    CHECK(group.order() == brute.size());
    for (const auto& p : brute) CHECK(group.contains(Perm(p)));
    auto sizes = std::vector<int>{};
    for (const auto& cell : vertex_orbits(group).cells) sizes.push_back(static_cast<int>(cell.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::orbit_sizes(n, brute));
  }
}

TEST_CASE("search budget is enforced") {
  SearchOptions tiny;
  tiny.node_budget = 2;
  try {
    automorphism_generators(handpicked("petersen"), tiny);
    FAIL("expected budget failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::search_budget_exceeded);
  }
}

TEST_CASE("vertex orbits") {
  const auto star = vertex_orbits(automorphism_generators(family("star", {5})));
  CHECK(star.size() == 2);
  CHECK(star.cells[0] == std::vector<int>{0});
  const auto path = vertex_orbits(automorphism_generators(Graph(3, {{0, 1}, {1, 2}})));
  CHECK(path.size() == 2);
  CHECK(path.cell_of[0] == path.cell_of[2]);
}

TEST_CASE("schreier-sims from arbitrary generators") {
  // S_5 from a transposition and a 5-cycle.
  const PermGroup s5(5, {Perm(std::vector<int>{1, 0, 2, 3, 4}), Perm(std::vector<int>{1, 2, 3, 4, 0})});
  CHECK(s5.order() == 120);
  CHECK(s5.elements().size() == 120);
  // A_4 from two 3-cycles.
  const PermGroup a4(4, {Perm(std::vector<int>{1, 2, 0, 3}), Perm(std::vector<int>{0, 2, 3, 1})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Perm(std::vector<int>{1, 0, 2, 3})));
}

TEST_CASE("bitstring orbits of small examples") {
  const auto k3 = automorphism_generators(family("complete", {3}));
  CHECK(bitstring_orbits(k3, false, 3).count() == 4);
  CHECK(bitstring_orbits(k3, true, 3).count() == 2);
  const auto c4 = automorphism_generators(family("cycle", {4}));
  // weights 0,1,3,4 plus two classes of weight 2 (adjacent, opposite)
  CHECK(bitstring_orbits(c4, false, 4).count() == 6);
  CHECK(bitstring_orbits(c4, true, 4).count() == 4);
  const auto orbits = bitstring_orbits(c4, false, 4);
  CHECK(orbits.orbit_of[0b0101] == orbits.orbit_of[0b1010]);
  CHECK(orbits.orbit_of[0b0011] != orbits.orbit_of[0b0101]);
  CHECK(orbits.representative[orbits.orbit_of[0b1100]] == 0b0011);
  CHECK(permute_bits(0b001, Perm(std::vector<int>{2, 0, 1})) == 0b100);
  CHECK(global_flip(0b0110, 4) == 0b1001);
  CHECK_THROWS_AS(bitstring_orbits(PermGroup(21, {}), false, 21), Error);
  std::vector<std::vector<std::uint32_t>> bad = {{0, 0, 1, 2}};
  CHECK_THROWS_AS(bitstring_orbits(bad, 2), Error);
}

TEST_CASE("quotient dimension of complete graphs: three routes agree") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const auto group = automorphism_generators(family("complete", {n}));
    for (bool flip : {false, true}) {
      const auto q = quotient_dimension(group, flip, n);
      CHECK(q.dimension == static_cast<std::uint64_t>(flip ? n / 2 + 1 : n + 1));
      REQUIRE(q.burnside_evaluated);
      CHECK(q.fixed_point_sum == q.group_order * q.dimension);
      CHECK(q.stabilizer_sum == q.group_order * q.dimension);
      const auto [num, den] = q.inverse_orbit_sum();
      CHECK(den == 1);
      CHECK(num == q.dimension);
    }
  }
}

TEST_CASE("quotient dimension matches brute-force closure") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    const auto g = random_graph(n, 0.5, rng);
    const auto brute = oracle::automorphisms(n, edges_of(g));
    const auto group = automorphism_generators(g);
    for (bool flip : {false, true}) {
      std::vector<std::vector<std::uint32_t>> maps;
      for (const auto& p : brute) maps.push_back(bit_map(p, n, false));
      if (flip) {
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        maps.push_back(bit_map(id, n, true));
      }
      const auto q = quotient_dimension(group, flip, n);
      CHECK(q.dimension == oracle::orbit_count(n, maps));
      CHECK(bitstring_orbits(maps, n).count() == q.dimension);
    }
  }
}

TEST_CASE("fixed bitstrings from cycle type") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (bool flip : {false, true}) CHECK(fixed_bitstrings(Perm(p), flip) == oracle::fixed_count(n, p, flip));
  }
}
