// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms; inputs are plain edge lists.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;
using cd = std::complex<double>;

inline bool adjacent(const EdgeList& e, int u, int v) {
  for (const auto& [a, b] : e)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

/// Every vertex permutation preserving the edge set (n <= 8 or so).
inline std::vector<std::vector<int>> automorphisms(int n, const EdgeList& e) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const auto& [u, v] : e) {
      if (!adjacent(e, p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Vertex orbit sizes from an explicit element list.
inline std::vector<int> orbit_sizes(int n, const std::vector<std::vector<int>>& elements) {
  std::vector<int> sizes;
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::set<int> orbit;
    for (const auto& p : elements) orbit.insert(p[static_cast<std::size_t>(v)]);
    for (int w : orbit) seen[static_cast<std::size_t>(w)] = true;
    sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline double entropy_of(int n, const std::vector<int>& sizes) {
  double s = 0;
  for (int k : sizes) s += k * std::log(static_cast<double>(k));
  return s / n;
}

/// Cut value of assignment x (bit j = vertex j).
inline int cut(const EdgeList& e, std::uint64_t x) {
  int c = 0;
  for (const auto& [u, v] : e) c += static_cast<int>(((x >> u) ^ (x >> v)) & 1u);
  return c;
}

inline int max_cut(int n, const EdgeList& e) {
  int best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) best = std::max(best, cut(e, x));
  return best;
}

/// Dense 2^n x 2^n QAOA: U_B(β) built as a Kronecker product of 2x2
/// rotations, U_C(γ) as an explicit diagonal matrix.
inline Eigen::VectorXcd dense_state(int n, const EdgeList& e, const std::vector<double>& betas,
                                    const std::vector<double>& gammas) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0));
  for (std::size_t layer = 0; layer < betas.size(); ++layer) {
    Eigen::MatrixXcd uc = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) uc(x, x) = std::exp(cd(0, -gammas[layer] * cut(e, static_cast<std::uint64_t>(x))));
    Eigen::Matrix2cd r;
    const double c = std::cos(betas[layer]), s = std::sin(betas[layer]);
    r << cd(c, 0), cd(0, -s), cd(0, -s), cd(c, 0);
    // Qubit j is bit j, so the most significant factor comes first.
    Eigen::MatrixXcd ub = Eigen::MatrixXcd::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd next(ub.rows() * 2, ub.cols() * 2);
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b) next.block(a * ub.rows(), b * ub.cols(), ub.rows(), ub.cols()) = r(a, b) * ub;
      ub = next;
    }
    psi = ub * (uc * psi);
  }
  return psi;
}

inline double dense_expectation(int n, const EdgeList& e, const std::vector<double>& betas,
                                const std::vector<double>& gammas) {
  const auto psi = dense_state(n, e, betas, gammas);
  double s = 0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) s += std::norm(psi[x]) * cut(e, static_cast<std::uint64_t>(x));
  return s;
}

/// Single edge, p = 1, written out with explicit 4x4 matrices.
inline Eigen::Vector4d single_edge_probabilities(double beta, double gamma) {
  Eigen::Matrix4cd uc = Eigen::Matrix4cd::Zero();
  const double f[4] = {0, 1, 1, 0};
  for (int x = 0; x < 4; ++x) uc(x, x) = std::exp(cd(0, -gamma * f[x]));
  const cd c(std::cos(beta), 0), s(0, -std::sin(beta));
  Eigen::Matrix4cd ub;
  ub << c * c, s * c, s * c, s * s,
        s * c, c * c, s * s, s * c,
        s * c, s * s, c * c, s * c,
        s * s, s * c, s * c, c * c;
  Eigen::Vector4cd psi = Eigen::Vector4cd::Constant(cd(0.5, 0));
  psi = ub * (uc * psi);
  return psi.cwiseAbs2();
}

/// Bitstrings x in [0, 2^n) with map(x) = x, where map permutes bits by p
/// (bit j -> bit p[j]) and optionally complements.
inline std::uint64_t fixed_count(int n, const std::vector<int>& p, bool flip) {
  std::uint64_t count = 0;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t x = 0; x <= mask; ++x) {
    std::uint64_t y = 0;
    for (int j = 0; j < n; ++j)
      if ((x >> j) & 1u) y |= std::uint64_t{1} << p[static_cast<std::size_t>(j)];
    if (flip) y ^= mask;
    count += y == x;
  }
  return count;
}

/// Number of orbits of {0,1}^n under explicit bijections, by BFS closure.
inline std::size_t orbit_count(int n, const std::vector<std::vector<std::uint32_t>>& maps) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<bool> seen(dim);
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    if (seen[x]) continue;
    ++orbits;
    std::vector<std::size_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      for (const auto& m : maps) {
        if (!seen[m[y]]) {
          seen[m[y]] = true;
          stack.push_back(m[y]);
        }
      }
    }
  }
  return orbits;
}

/// Gaussian elimination with partial pivoting on a copy.
inline std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace oracle
