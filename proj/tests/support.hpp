// Test-only oracles and helpers. Everything here is deliberately independent
// of the library's implementation paths: brute-force summation instead of
// Euler-Maclaurin, grid search instead of golden section, Floyd-Warshall
// instead of BFS.

#pragma once

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace testsup {

// ---------------------------------------------------------------------------
// zeta and power-law fitting oracles
// ---------------------------------------------------------------------------

/// Raw partial sum of (a+k)^-s until a+k >= 1000, closed with the integral of
/// the summand, half the boundary term and the first Bernoulli correction.
inline double brute_hurwitz_zeta(double s, double a) {
  double sum = 0.0;
  double x = a;
  while (x < 1000.0) {
    sum += std::pow(x, -s);
    x += 1.0;
  }
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) +
         s * std::pow(x, -s - 1.0) / 12.0;
  return sum;
}

struct GridFit {
  double alpha = 0.0;
  int x_min = 0;
  int n_tail = 0;
  double ks = 0.0;
};

/// Brute-force fit: alpha by 0.01-step grid over the discrete log-likelihood,
/// x_min by exhaustive KS minimization over the distinct positive values
/// (largest excluded so the tail keeps two distinct values), KS ties toward
/// the smaller x_min.
inline GridFit grid_fit_oracle(const std::vector<int>& degrees, double alpha_lo = 1.01,
                               double alpha_hi = 8.0, double step = 0.01) {
  std::vector<int> vals;
  for (int k : degrees)
    if (k >= 1) vals.push_back(k);
  std::sort(vals.begin(), vals.end());
  std::vector<int> distinct(vals);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  GridFit best;
  bool have_best = false;
  for (std::size_t c = 0; c + 1 < distinct.size(); ++c) {
    const int xm = distinct[c];
    std::vector<int> tail;
    for (int k : vals)
      if (k >= xm) tail.push_back(k);
    if (tail.size() < 2) continue;

    double sum_ln = 0.0;
    for (int k : tail) sum_ln += std::log(static_cast<double>(k));

    double best_ll = 0.0, best_alpha = 0.0;
    bool have_alpha = false;
    for (double a = alpha_lo; a <= alpha_hi + 1e-12; a += step) {
      const double ll =
          -static_cast<double>(tail.size()) * std::log(brute_hurwitz_zeta(a, xm)) - a * sum_ln;
      if (!have_alpha || ll > best_ll) {
        best_ll = ll;
        best_alpha = a;
        have_alpha = true;
      }
    }

    const double z = brute_hurwitz_zeta(best_alpha, xm);
    double ks = 0.0;
    std::size_t i = 0;
    while (i < tail.size()) {
      std::size_t j = i;
      while (j < tail.size() && tail[j] == tail[i]) ++j;
      const double emp = static_cast<double>(j) / static_cast<double>(tail.size());
      const double model = 1.0 - brute_hurwitz_zeta(best_alpha, tail[i] + 1.0) / z;
      ks = std::max(ks, std::abs(emp - model));
      i = j;
    }
    if (!have_best || ks < best.ks) {
      best = GridFit{best_alpha, xm, static_cast<int>(tail.size()), ks};
      have_best = true;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// graph oracles
// ---------------------------------------------------------------------------

constexpr int kUnreached = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const sfnet::Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), kUnreached));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const sfnet::Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Uniform simple graph with m edges added by rejection.
inline sfnet::Graph random_graph(int n, int m, sfnet::Rng& rng) {
  sfnet::Graph g(n);
  while (static_cast<int>(g.edge_count()) < m) {
    const int a = rng.below_int(n);
    const int b = rng.below_int(n);
    if (a == b || g.has_edge(a, b)) continue;
    g.add_edge(sfnet::Edge(a, b));
  }
  return g;
}

inline sfnet::Graph erdos_renyi(int n, double p, sfnet::Rng& rng) {
  sfnet::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(sfnet::Edge(u, v));
  return g;
}

inline sfnet::Graph relabel(const sfnet::Graph& g, const std::vector<int>& perm) {
  sfnet::Graph out(g.node_count());
  for (const sfnet::Edge& e : g.edges()) out.add_edge(sfnet::Edge(perm[e.u], perm[e.v]));
  return out;
}

/// Rebuilds adjacency from the edge list and cross-checks every structural
/// invariant of the Graph class.
inline void assert_graph_consistent(const sfnet::Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> seen;
  for (const sfnet::Edge& e : g.edges()) {
    if (e.u >= e.v || e.u < 0 || e.v >= n) throw std::logic_error("non-canonical edge");
    if (!seen.emplace(e.u, e.v).second) throw std::logic_error("duplicate edge");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    auto expect = adj[u];
    auto got = g.neighbors(u);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got) throw std::logic_error("adjacency and edge set disagree");
    degree_sum += got.size();
  }
  if (degree_sum != 2 * g.edge_count()) throw std::logic_error("degree sum mismatch");
}

// ---------------------------------------------------------------------------
// distributions for synthetic data
// ---------------------------------------------------------------------------

/// Geometric on k >= 1 with P(k) = (1 - q) q^(k-1).
inline int geometric_draw(double q, sfnet::Rng& rng) {
  const double u = rng.unit();
  return 1 + static_cast<int>(std::floor(std::log1p(-u) / std::log(q)));
}

/// Standard normal via Box-Muller.
inline double normal_draw(sfnet::Rng& rng) {
  double u1 = rng.unit();
  while (u1 <= 0.0) u1 = rng.unit();
  const double u2 = rng.unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// ---------------------------------------------------------------------------
// simple statistics
// ---------------------------------------------------------------------------

/// One-sided binomial tail P(X >= k) for X ~ Bin(n, 1/2).
inline double sign_test_pvalue(int k, int n) {
  double p = 0.0;
  for (int i = k; i <= n; ++i) {
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
    p += std::exp(log_c - n * std::log(2.0));
  }
  return std::min(p, 1.0);
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------
// filesystem helpers
// ---------------------------------------------------------------------------

inline std::string make_temp_dir(const std::string& tag) {
  static std::uint64_t counter = 0;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("sfnet_" + tag + "_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace testsup
