#include "qsym/generators.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/automorphism.hpp"
#include "qsym/error.hpp"
#include "qsym/rng.hpp"

namespace qsym {

namespace {

constexpr int kMaxVertices = 4096;
constexpr int kRegularAttempts = 1000;
constexpr int kAsymmetricAttempts = 20000;

void require(bool ok, const GraphFamily& f, const std::string& why) {
  if (!ok) fail(ErrorKind::invalid_params, f.name + ": " + why);
}

int param(const GraphFamily& f, std::size_t i, std::int64_t lo) {
  require(f.params.size() > i, f, "missing parameter " + std::to_string(i));
  const auto v = f.params[i];
  require(v >= lo && v <= kMaxVertices, f, "parameter " + std::to_string(i) + " out of range");
  return static_cast<int>(v);
}

void expect_params(const GraphFamily& f, std::size_t lo, std::size_t hi) {
  require(f.params.size() >= lo && f.params.size() <= hi, f, "wrong number of parameters");
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph grid(int a, int b, bool periodic) {
  std::vector<Edge> e;
  auto id = [b](int r, int c) { return r * b + c; };
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < b; ++c) {
      if (c + 1 < b) e.emplace_back(id(r, c), id(r, c + 1));
      else if (periodic && b > 2) e.emplace_back(id(r, c), id(r, 0));
      if (r + 1 < a) e.emplace_back(id(r, c), id(r + 1, c));
      else if (periodic && a > 2) e.emplace_back(id(r, c), id(0, c));
    }
  }
  return Graph(a * b, std::move(e));
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "complete", "complete-bipartite", "cycle", "star", "wheel", "ladder", "circular-ladder", "antiprism",
      "grid2d", "random-regular", "trivial-aut", "hand-picked", "custom"};
  return names;
}

std::vector<std::string> handpicked_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::bundled_graphs()) names.emplace_back(name);
  return names;
}

Graph handpicked(std::string_view name) {
  for (const auto& [key, text] : detail::bundled_graphs())
    if (key == name) return parse_edge_list(text);
  fail(ErrorKind::invalid_params, "hand-picked: unknown graph '" + std::string(name) + "'");
}

Graph random_regular(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0)
    fail(ErrorKind::invalid_params, "random-regular: no simple " + std::to_string(k) + "-regular graph on " +
                                        std::to_string(n) + " vertices");
  Rng rng(seed);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<unsigned char> present(nn * nn);
  for (int attempt = 0; attempt < kRegularAttempts; ++attempt) {
    // Pair shuffled stubs, keep the pairs that are simple, re-pair the rest.
    std::fill(present.begin(), present.end(), 0);
    std::vector<Edge> edges;
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < k; ++j) stubs.push_back(v);
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      rng.shuffle(stubs.begin(), stubs.end());
      std::vector<int> left;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const int u = std::min(stubs[i], stubs[i + 1]), v = std::max(stubs[i], stubs[i + 1]);
        auto& slot = present[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)];
        if (u != v && !slot) {
          slot = 1;
          edges.emplace_back(u, v);
        } else {
          left.push_back(u);
          left.push_back(v);
        }
      }
      // Give up on this attempt if no leftover pair can ever be joined.
      std::vector<int> distinct = left;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      stuck = !left.empty();
      for (std::size_t i = 0; i < distinct.size() && stuck; ++i)
        for (std::size_t j = i + 1; j < distinct.size() && stuck; ++j)
          if (!present[static_cast<std::size_t>(distinct[i]) * nn + static_cast<std::size_t>(distinct[j])]) stuck = false;
      stubs = std::move(left);
    }
    if (stuck) continue;
    Graph g(n, std::move(edges));
    if (k > 0 && !g.is_connected()) continue;
    return g;
  }
  fail(ErrorKind::invalid_params, "random-regular: no simple connected sample after " +
                                      std::to_string(kRegularAttempts) + " attempts");
}

Graph random_asymmetric(int n, int extra_edges, std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 7 || extra_edges < 0 || (n - 1) + static_cast<long long>(extra_edges) > max_edges - n + 1)
    fail(ErrorKind::invalid_params, "trivial-aut: need n >= 7 and a sparse enough edge budget");
  Rng rng(seed);
  for (int attempt = 0; attempt < kAsymmetricAttempts; ++attempt) {
    // Random recursive tree, then random chords.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order.begin(), order.end());
    std::vector<Edge> edges;
    std::vector<unsigned char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto add = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      auto& slot = present[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
      if (u == v || slot) return false;
      slot = 1;
      edges.emplace_back(u, v);
      return true;
    };
    for (int i = 1; i < n; ++i) {
      const auto parent = order[rng.uniform_index(static_cast<std::uint64_t>(i))];
      add(order[static_cast<std::size_t>(i)], parent);
    }
    int added = 0;
    while (added < extra_edges) {
      const auto u = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
      if (add(u, v)) ++added;
    }
    Graph g(n, std::move(edges));
    if (automorphism_generators(g).generators().empty()) return g;
  }
  fail(ErrorKind::invalid_params, "trivial-aut: no asymmetric sample found");
}

Graph generate(const GraphFamily& f) {
  const auto& name = f.name;
  if (name == "complete") {
    expect_params(f, 1, 1);
    const int n = param(f, 0, 2);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
  }
  if (name == "complete-bipartite") {
    expect_params(f, 2, 2);
    const int a = param(f, 0, 1), b = param(f, 1, 1);
    require(a + b <= kMaxVertices, f, "too many vertices");
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
  }
  if (name == "cycle") {
    expect_params(f, 1, 1);
    return cycle_graph(param(f, 0, 3));
  }
  if (name == "star") {
    expect_params(f, 1, 1);
    const int n = param(f, 0, 2);
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, std::move(e));
  }
  if (name == "wheel") {
    expect_params(f, 1, 1);
    const int n = param(f, 0, 4);
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
      e.emplace_back(0, v);
      e.emplace_back(v, v + 1 < n ? v + 1 : 1);
    }
    return Graph(n, std::move(e));
  }
  if (name == "ladder") {
    expect_params(f, 1, 1);
    return grid(2, param(f, 0, 2), false);
  }
  if (name == "circular-ladder") {
    expect_params(f, 1, 1);
    const int k = param(f, 0, 3);
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(i, (i + 1) % k);
      e.emplace_back(k + i, k + (i + 1) % k);
      e.emplace_back(i, k + i);
    }
    return Graph(2 * k, std::move(e));
  }
  if (name == "antiprism") {
    expect_params(f, 1, 1);
    const int k = param(f, 0, 3);
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(i, (i + 1) % k);
      e.emplace_back(k + i, k + (i + 1) % k);
      e.emplace_back(i, k + i);
      e.emplace_back(k + i, (i + 1) % k);
    }
    return Graph(2 * k, std::move(e));
  }
  if (name == "grid2d") {
    expect_params(f, 2, 3);
    const int a = param(f, 0, 1), b = param(f, 1, 2);
    const bool periodic = f.params.size() == 3 && f.params[2] != 0;
    require(static_cast<long long>(a) * b <= kMaxVertices, f, "too many vertices");
    return grid(a, b, periodic);
  }
  if (name == "random-regular") {
    expect_params(f, 2, 2);
    return random_regular(param(f, 0, 1), param(f, 1, 0), f.seed);
  }
  if (name == "trivial-aut") {
    expect_params(f, 1, 2);
    const int n = param(f, 0, 7);
    const int extra = f.params.size() > 1 ? param(f, 1, 0) : 0;
    return random_asymmetric(n, extra, f.seed);
  }
  if (name == "hand-picked") {
    expect_params(f, 0, 0);
    return handpicked(f.label);
  }
  if (name == "custom") {
    expect_params(f, 0, 0);
    require(!f.label.empty(), f, "custom family needs an edge-list path");
    return read_edge_list_file(f.label);
  }
  fail(ErrorKind::invalid_params, "unknown graph family '" + name + "'");
}

}  // namespace qsym
