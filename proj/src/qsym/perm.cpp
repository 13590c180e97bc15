#include "qsym/perm.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "qsym/error.hpp"

namespace qsym {

// ---------------------------------------------------------------- Perm

Perm::Perm(int n) : images_(static_cast<std::size_t>(n)) { std::iota(images_.begin(), images_.end(), 0); }

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      fail(ErrorKind::not_a_bijection, "image list is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return inv;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Perm::cycle_lengths() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

int Perm::num_cycles() const { return static_cast<int>(cycle_lengths().size()); }

std::string Perm::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? " " : "") << images_[i];
  return out.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::dimension_mismatch, "composing permutations of different degree");
  Perm c;
  c.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) c.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return c;
}

Perm parse_perm(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> images;
  long long v;
  while (in >> v) {
    if (v < 0 || v > 1'000'000) fail(ErrorKind::not_a_bijection, "image out of range");
    images.push_back(static_cast<int>(v));
  }
  if (!in.eof()) fail(ErrorKind::parse_error, "malformed permutation line '" + line + "'");
  return Perm(std::move(images));
}

// ---------------------------------------------------------------- Partition

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.cell_of.assign(labels.size(), -1);
  std::vector<int> cell_for_label;
  // Cells are created in order of their smallest member.
  std::vector<std::pair<int, int>> first_seen;  // label -> cell
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(first_seen.begin(), first_seen.end(), [&](auto& e) { return e.first == labels[v]; });
    int cell;
    if (it == first_seen.end()) {
      cell = static_cast<int>(p.cells.size());
      first_seen.emplace_back(labels[v], cell);
      p.cells.emplace_back();
    } else {
      cell = it->second;
    }
    p.cell_of[v] = cell;
    p.cells[static_cast<std::size_t>(cell)].push_back(static_cast<int>(v));
  }
  return p;
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Chain {
  struct Level {
    int point = -1;
    std::vector<std::optional<Perm>> transversal;  // transversal[b](point) == b
    std::vector<int> orbit;
  };

  std::once_flag built;
  bool trusted = false;
  std::vector<int> trusted_base;
  std::vector<Perm> strong;        // strong generators
  std::vector<int> strong_depth;   // strong[i] fixes base points 0..depth-1
  std::vector<Level> levels;
  BigInt order = 1;
  double log_order = 0.0;

  void rebuild_level(std::size_t k, int n) {
    auto& lvl = levels[k];
    lvl.transversal.assign(static_cast<std::size_t>(n), std::nullopt);
    lvl.orbit.clear();
    lvl.transversal[static_cast<std::size_t>(lvl.point)] = Perm(n);
    lvl.orbit.push_back(lvl.point);
    for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
      const int x = lvl.orbit[head];
      for (std::size_t s = 0; s < strong.size(); ++s) {
        if (strong_depth[s] < static_cast<int>(k)) continue;
        const int y = strong[s](x);
        auto& slot = lvl.transversal[static_cast<std::size_t>(y)];
        if (!slot) {
          slot = strong[s] * *lvl.transversal[static_cast<std::size_t>(x)];
          lvl.orbit.push_back(y);
        }
      }
    }
  }

  /// Strips h through levels from `start`; returns residue and the level
  /// where stripping stopped.
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t start) const {
    for (std::size_t k = start; k < levels.size(); ++k) {
      const int b = h(levels[k].point);
      const auto& u = levels[k].transversal[static_cast<std::size_t>(b)];
      if (!u) return {std::move(h), k};
      h = u->inverse() * h;
    }
    return {std::move(h), levels.size()};
  }

  static int first_moved(const Perm& g) {
    for (int i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  void add_strong(Perm g, std::size_t depth, int n) {
    if (depth == levels.size()) {
      levels.emplace_back();
      levels.back().point = first_moved(g);
    }
    strong.push_back(std::move(g));
    strong_depth.push_back(static_cast<int>(depth));
    for (std::size_t k = 0; k <= depth; ++k) rebuild_level(k, n);
  }

  void schreier_sims(const std::vector<Perm>& gens, int n) {
    for (const auto& g : gens) {
      auto [residue, depth] = sift(g, 0);
      if (!residue.is_identity()) add_strong(std::move(residue), depth, n);
    }
    // checked[k] holds (orbit point, strong generator index) pairs already
    // verified at level k.
    std::vector<std::set<std::pair<int, std::size_t>>> checked(levels.size());
    std::size_t k = levels.size();
    while (k > 0) {
      const std::size_t level = k - 1;
      if (checked.size() < levels.size()) checked.resize(levels.size());
      bool extended = false;
      const auto orbit = levels[level].orbit;
      for (int b : orbit) {
        for (std::size_t s = 0; s < strong.size() && !extended; ++s) {
          if (strong_depth[s] < static_cast<int>(level)) continue;
          if (!checked[level].insert({b, s}).second) continue;
          const auto& ub = *levels[level].transversal[static_cast<std::size_t>(b)];
          const int sb = strong[s](b);
          const auto& usb = *levels[level].transversal[static_cast<std::size_t>(sb)];
          Perm h = usb.inverse() * (strong[s] * ub);
          auto [residue, depth] = sift(std::move(h), level + 1);
          if (!residue.is_identity()) {
            add_strong(std::move(residue), depth, n);
            if (checked.size() < levels.size()) checked.resize(levels.size());
            k = depth + 1;
            extended = true;
          }
        }
        if (extended) break;
      }
      if (!extended) --k;
    }
  }

  void finish() {
    order = 1;
    log_order = 0.0;
    for (const auto& lvl : levels) {
      order *= static_cast<unsigned>(lvl.orbit.size());
      log_order += std::log(static_cast<double>(lvl.orbit.size()));
    }
  }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree), chain_(std::make_shared<Chain>()) {
  if (degree < 0) fail(ErrorKind::invalid_params, "negative degree");
  for (auto& g : generators) {
    if (g.degree() != degree) fail(ErrorKind::dimension_mismatch, "generator degree differs from group degree");
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

PermGroup PermGroup::from_strong_generators(int degree, std::vector<Perm> generators, std::vector<int> base) {
  PermGroup group(degree, std::move(generators));
  group.chain_->trusted = true;
  group.chain_->trusted_base = std::move(base);
  return group;
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(chain_->built, [this] {
    auto& c = *chain_;
    if (c.trusted) {
      // Generator g belongs at depth d = number of leading base points it fixes.
      for (const auto& g : generators_) {
        std::size_t d = 0;
        while (d < c.trusted_base.size() && g(c.trusted_base[d]) == c.trusted_base[d]) ++d;
        c.strong.push_back(g);
        c.strong_depth.push_back(static_cast<int>(d));
      }
      // Drop trailing base points with trivial basic orbits.
      for (std::size_t k = 0; k < c.trusted_base.size(); ++k) {
        c.levels.emplace_back();
        c.levels.back().point = c.trusted_base[k];
        c.rebuild_level(k, degree_);
      }
      while (!c.levels.empty() && c.levels.back().orbit.size() == 1) c.levels.pop_back();
    } else {
      c.schreier_sims(generators_, degree_);
    }
    c.finish();
  });
  return *chain_;
}

const BigInt& PermGroup::order() const { return chain().order; }

double PermGroup::log_order() const { return chain().log_order; }

std::vector<int> PermGroup::base() const {
  std::vector<int> points;
  for (const auto& lvl : chain().levels) points.push_back(lvl.point);
  return points;
}

std::vector<int> PermGroup::basic_orbit_sizes() const {
  std::vector<int> sizes;
  for (const auto& lvl : chain().levels) sizes.push_back(static_cast<int>(lvl.orbit.size()));
  return sizes;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, depth] = chain().sift(g, 0);
  return depth == chain().levels.size() && residue.is_identity();
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& visit, std::uint64_t limit) const {
  const auto& c = chain();
  if (c.order > limit) fail(ErrorKind::size_limit, "group of order " + c.order.str() + " exceeds enumeration limit");
  std::function<void(std::size_t, const Perm&)> walk = [&](std::size_t k, const Perm& prefix) {
    if (k == c.levels.size()) {
      visit(prefix);
      return;
    }
    for (int b : c.levels[k].orbit) walk(k + 1, prefix * *c.levels[k].transversal[static_cast<std::size_t>(b)]);
  };
  walk(0, Perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const {
  std::vector<Perm> out;
  for_each_element([&](const Perm& g) { out.push_back(g); }, limit);
  return out;
}

Partition vertex_orbits(const PermGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : group.generators()) {
    for (int i = 0; i < n; ++i) {
      const int a = find(i), b = find(g(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = find(i);
  return Partition::from_labels(labels);
}

}  // namespace qsym
