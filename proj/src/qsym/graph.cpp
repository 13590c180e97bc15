#include "qsym/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qsym/error.hpp"

namespace qsym {

namespace {

Edge canonical(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) fail(ErrorKind::invalid_params, "negative vertex count");
  for (auto& e : edges_) {
    if (e.first < 0 || e.second < 0 || e.first >= n_ || e.second >= n_)
      fail(ErrorKind::range_error, "edge " + edge_str(e) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (e.first == e.second) fail(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(e.first));
    e = canonical(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
    fail(ErrorKind::duplicate_edge, "duplicate edge " + edge_str(*it));

  const auto n = static_cast<std::size_t>(n_);
  adjacency_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    matrix_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first);
    line = line.substr(0, line.find_last_not_of(" \t\r") + 1);

    std::vector<long long> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
      if (ec != std::errc{} || consumed == 0 ||
          (i + consumed < line.size() && line[i + consumed] != ' ' && line[i + consumed] != '\t'))
        fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected integers, got '" + std::string(line) + "'");
      fields.push_back(value);
      i += consumed;
    }

    if (n < 0) {
      if (fields.size() != 1 || fields[0] < 0 || fields[0] > 1'000'000)
        fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected vertex count");
      n = static_cast<int>(fields[0]);
    } else {
      if (fields.size() != 2)
        fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected 'u v'");
      if (fields[0] < 0 || fields[1] < 0 || fields[0] >= n || fields[1] >= n)
        fail(ErrorKind::range_error, "line " + std::to_string(line_no) + ": vertex out of range for n=" + std::to_string(n));
      edges.emplace_back(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
    }
    if (end == text.size()) break;
  }
  if (n < 0) fail(ErrorKind::parse_error, "missing vertex count");
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop;
  drop.reserve(removed.size());
  for (auto e : removed) {
    e = canonical(e);
    if (e.first < 0 || e.second >= g.num_vertices() || !g.has_edge(e.first, e.second))
      fail(ErrorKind::unknown_edge, "edge " + edge_str(e) + " is not in the graph");
    drop.push_back(e);
  }
  std::sort(drop.begin(), drop.end());
  if (auto it = std::adjacent_find(drop.begin(), drop.end()); it != drop.end())
    fail(ErrorKind::duplicate_edge, "edge " + edge_str(*it) + " removed twice");

  std::vector<Edge> kept;
  kept.reserve(g.num_edges() - drop.size());
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return Graph(g.num_vertices(), std::move(kept));
}

}  // namespace qsym
