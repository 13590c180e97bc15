#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qsym/automorphism.hpp"
#include "qsym/bitstring.hpp"
#include "qsym/error.hpp"
#include "qsym/generators.hpp"
#include "qsym/statevector.hpp"

using namespace qsym;
using std::numbers::pi;

namespace {

Graph family(const std::string& name, std::vector<std::int64_t> params, std::uint64_t seed = 0) {
  return generate({name, std::move(params), seed, ""});
}

oracle::EdgeList edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

Angles random_angles(int p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> b(0, pi), c(0, 2 * pi);
  Angles a;
  for (int i = 0; i < p; ++i) {
    a.betas.push_back(b(rng));
    a.gammas.push_back(c(rng));
  }
  return a;
}

}  // namespace

TEST_CASE("maxcut diagonal") {
  const auto d = maxcut_diagonal(family("complete", {3}));
  const std::vector<double> want = {0, 2, 2, 2, 2, 2, 2, 0};
  CHECK(std::vector<double>(d.values().begin(), d.values().end()) == want);
  CHECK(d.levels().size() == 2);
  CHECK(d.max() == 2);
  const auto g = Graph(4, {{0, 1}, {1, 3}});
  const auto dg = maxcut_diagonal(g);
  for (std::uint32_t x = 0; x < 16; ++x) CHECK(dg[x] == oracle::cut(edges_of(g), x));
  CHECK_THROWS_AS(maxcut_diagonal(family("cycle", {30})), Error);
}

TEST_CASE("single edge closed forms") {
  const Graph edge(2, {{0, 1}});
  const auto cost = maxcut_diagonal(edge);
  const Angles best{{pi / 8}, {pi / 2}};
  CHECK(expectation(evolve(cost, best), cost) == doctest::Approx(1.0).epsilon(1e-12));
  const auto flat = probabilities(evolve(cost, Angles{{pi / 4}, {pi / 2}}));
  for (double q : flat) CHECK(q == doctest::Approx(0.25).epsilon(1e-12));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_angles(1, rng);
    const auto probs = probabilities(evolve(cost, a));
    const auto ref = oracle::single_edge_probabilities(a.betas[0], a.gammas[0]);
    for (int x = 0; x < 4; ++x) CHECK(probs[static_cast<std::size_t>(x)] == doctest::Approx(ref[x]).epsilon(1e-12));
    const double closed = 0.5 + 0.5 * std::sin(4 * a.betas[0]) * std::sin(a.gammas[0]);
    CHECK(expectation(evolve(cost, a), cost) == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("statevector evolution matches dense matrices") {
  std::mt19937_64 rng(17);
  const std::vector<Graph> graphs = {family("complete", {4}), family("cycle", {5}), Graph(4, {{0, 1}, {1, 2}, {1, 3}}),
                                     family("trivial-aut", {7, 0}, 2), family("wheel", {6})};
  for (const auto& g : graphs) {
    const auto cost = maxcut_diagonal(g);
    for (int p = 1; p <= 3; ++p) {
      const auto a = random_angles(p, rng);
      const auto state = evolve(cost, a);
      const auto ref = oracle::dense_state(g.num_vertices(), edges_of(g), a.betas, a.gammas);
      for (Eigen::Index x = 0; x < ref.size(); ++x) {
        const auto amp = state.amplitudes()[static_cast<std::size_t>(x)];
        CHECK(std::abs(amp - ref[x]) < 1e-12);
      }
      CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(expectation(state, cost) ==
            doctest::Approx(oracle::dense_expectation(g.num_vertices(), edges_of(g), a.betas, a.gammas)).epsilon(1e-12));
    }
  }
}

TEST_CASE("flip-symmetric half state") {
  std::mt19937_64 rng(23);
  for (const auto& g : {family("random-regular", {10, 3}, 4), family("trivial-aut", {9, 1}, 1), family("grid2d", {2, 3})}) {
    const auto cost = maxcut_diagonal(g);
    const FlipSymmetricEvolver half(cost);
    for (int p = 1; p <= 4; ++p) {
      const auto a = random_angles(p, rng);
      const auto full = evolve(cost, a);
      const auto h = half.evolve(a);
      REQUIRE(h.size() * 2 == full.amplitudes().size());
      for (std::size_t x = 0; x < h.size(); ++x) CHECK(std::abs(h[x] - full.amplitudes()[x]) < 1e-12);
      CHECK(half.expectation(a) == doctest::Approx(expectation(full, cost)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(FlipSymmetricEvolver(CostDiagonal(2, {0, 1, 0, 1})), Error);
}

TEST_CASE("angle validation") {
  const auto cost = maxcut_diagonal(family("complete", {3}));
  CHECK_THROWS_AS(evolve(cost, Angles{{0.1, 0.2}, {0.3}}), Error);
  CHECK_THROWS_AS(evolve(cost, Angles{{}, {}}), Error);
}

TEST_CASE("probability output") {
  const auto s = StateVector::basis(3, 0b001);
  CHECK(bitstring_text(0b001, 3) == "100");
  const auto csv = probabilities_csv(s);
  CHECK(csv.find("100,1") != std::string::npos);
  CHECK(StateVector::uniform(2).amplitudes()[3] == Complex(0.5, 0));
}

TEST_CASE("evolved states are constant on symmetry orbits") {
  std::mt19937_64 rng(31);
  for (const auto& g : {family("complete", {5}), family("cycle", {6}), handpicked("petersen"), family("star", {7})}) {
    const int n = g.num_vertices();
    const auto group = automorphism_generators(g);
    const auto orbits = bitstring_orbits(group, true, n);
    const auto state = evolve(maxcut_diagonal(g), random_angles(3, rng));
    const auto spread = orbit_spread(state, orbits);
    CHECK(spread.probability < 1e-12);
    CHECK(spread.amplitude < 1e-12);
  }
  // A symmetric initial superposition is not assumed: a basis state spreads.
  const auto k3 = automorphism_generators(family("complete", {3}));
  CHECK(orbit_spread(StateVector::basis(3, 1), bitstring_orbits(k3, false, 3)).probability == doctest::Approx(1.0));
}

TEST_CASE("symmetry conditions") {
  const auto g = family("cycle", {5});
  const auto cost = maxcut_diagonal(g);
  const auto group = automorphism_generators(g);
  for (const auto& gen : group.generators()) {
    std::vector<std::uint32_t> map(32);
    for (std::uint32_t x = 0; x < 32; ++x) map[x] = permute_bits(x, gen);
    const auto c = check_symmetry_conditions(map, cost);
    CHECK(c.cost_commutes);
    CHECK(c.mixer_commutes);
  }
  std::vector<std::uint32_t> flip(32);
  for (std::uint32_t x = 0; x < 32; ++x) flip[x] = global_flip(x, 5);
  const auto cf = check_symmetry_conditions(flip, cost);
  CHECK(cf.cost_commutes);
  CHECK(cf.mixer_commutes);
  // A bit rotation that is not a graph symmetry keeps the mixer but not the cost.
  const Graph path(3, {{0, 1}, {1, 2}});
  std::vector<std::uint32_t> rot(8);
  for (std::uint32_t x = 0; x < 8; ++x) rot[x] = permute_bits(x, Perm(std::vector<int>{1, 2, 0}));
  const auto cr = check_symmetry_conditions(rot, maxcut_diagonal(path));
  CHECK_FALSE(cr.cost_commutes);
  CHECK(cr.mixer_commutes);
  // Swapping 00 and 01 on a single edge breaks both.
  const std::vector<std::uint32_t> swap = {1, 0, 2, 3};
  const auto cs = check_symmetry_conditions(swap, maxcut_diagonal(Graph(2, {{0, 1}})));
  CHECK_FALSE(cs.cost_commutes);
  CHECK_FALSE(cs.mixer_commutes);
  const std::vector<std::uint32_t> bad = {0, 0, 2, 3};
  CHECK_THROWS_AS(check_symmetry_conditions(bad, maxcut_diagonal(Graph(2, {{0, 1}}))), Error);
}
