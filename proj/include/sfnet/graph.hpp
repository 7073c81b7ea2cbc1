#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <vector>

#include "sfnet/error.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

/// Undirected edge in canonical order (u < v).
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw SelfLoop(a);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;  // lexicographic on (u, v)
};

/// Undirected simple graph over nodes 0..n-1.
///
/// Edges live in a vector (uniform sampling, deterministic enumeration) with a
/// hash index for O(1) membership and removal. Node labels are stable: nothing
/// here ever re-indexes nodes, so positional measurements (diagonal distance)
/// stay comparable across mutations.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw ConfigInvalid("negative node count");
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(Edge(u, v));
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e);
    return g;
  }

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t max_edges() const {
    return static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2;
  }
  bool is_complete() const { return edges_.size() == max_edges(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const {
    check_node(u);
    return adj_[static_cast<std::size_t>(u)];
  }
  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

  bool has_edge(int a, int b) const {
    if (a == b) return false;
    check_node(a);
    check_node(b);
    return index_.count(key(std::min(a, b), std::max(a, b))) != 0;
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // edges pass by value: callers legitimately hand in references into this
  // graph's own edge vector, which mutation would otherwise invalidate mid-call
  void add_edge(Edge e) {
    check_node(e.u);
    check_node(e.v);
    if (index_.count(key(e.u, e.v))) throw EdgeExists(e.u, e.v);
    index_.emplace(key(e.u, e.v), edges_.size());
    edges_.push_back(e);
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  void remove_edge(Edge e) {
    check_node(e.u);
    check_node(e.v);
    auto it = index_.find(key(e.u, e.v));
    if (it == index_.end()) throw EdgeMissing(e.u, e.v);
    const std::size_t slot = it->second;
    index_.erase(it);
    if (slot + 1 != edges_.size()) {
      edges_[slot] = edges_.back();
      index_[key(edges_[slot].u, edges_[slot].v)] = slot;
    }
    edges_.pop_back();
    drop_neighbor(e.u, e.v);
    drop_neighbor(e.v, e.u);
  }

  /// Uniform draw from the complement set (pairs not in E), by rejection.
  Edge sample_non_edge(Rng& rng) const {
    if (n_ < 2 || is_complete()) throw GraphComplete();
    for (;;) {
      const int a = rng.below_int(n_);
      const int b = rng.below_int(n_);
      if (a == b) continue;
      if (!index_.count(key(std::min(a, b), std::max(a, b)))) return Edge(a, b);
    }
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> degs(static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; ++u) degs[static_cast<std::size_t>(u)] = degree(u);
    return degs;
  }

  struct PathStats {
    double average = 0.0;          // mean BFS distance over connected pairs
    std::size_t connected_pairs = 0;  // unordered pairs with a finite distance
  };

  /// Average shortest path-length over connected unordered pairs. Disconnected
  /// pairs are excluded from the mean; the count of pairs that did enter it is
  /// reported alongside.
  PathStats avg_shortest_path() const {
    if (edges_.empty()) throw NoConnectedPairs();
    std::vector<int> dist(static_cast<std::size_t>(n_));
    std::vector<int> frontier;
    frontier.reserve(static_cast<std::size_t>(n_));
    long double total = 0.0L;
    std::size_t pairs = 0;
    for (int s = 0; s < n_; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[static_cast<std::size_t>(s)] = 0;
      frontier.assign(1, s);
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
          const int du = dist[static_cast<std::size_t>(u)];
          for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
              dist[static_cast<std::size_t>(w)] = du + 1;
              next.push_back(w);
            }
          }
        }
        frontier.swap(next);
      }
      for (int t = s + 1; t < n_; ++t) {
        const int d = dist[static_cast<std::size_t>(t)];
        if (d > 0) {
          total += d;
          ++pairs;
        }
      }
    }
    if (pairs == 0) throw NoConnectedPairs();
    return PathStats{static_cast<double>(total / pairs), pairs};
  }

  /// Mean of per-node clustering coefficients 2*E_i / (k_i (k_i - 1)); nodes
  /// with degree < 2 contribute 0.
  double avg_clustering() const {
    if (n_ == 0) return 0.0;
    std::vector<char> mark(static_cast<std::size_t>(n_), 0);
    long double sum = 0.0L;
    for (int i = 0; i < n_; ++i) {
      const auto& nbrs = adj_[static_cast<std::size_t>(i)];
      const std::size_t k = nbrs.size();
      if (k < 2) continue;
      for (int j : nbrs) mark[static_cast<std::size_t>(j)] = 1;
      std::size_t links = 0;  // each neighbor-neighbor edge counted twice below
      for (int j : nbrs)
        for (int w : adj_[static_cast<std::size_t>(j)])
          if (mark[static_cast<std::size_t>(w)]) ++links;
      for (int j : nbrs) mark[static_cast<std::size_t>(j)] = 0;
      sum += static_cast<long double>(links) / (static_cast<long double>(k) * (k - 1));
    }
    return static_cast<double>(sum / n_);
  }

  /// Mean normalized distance of adjacency nonzeros from the main diagonal,
  /// D = sum_{(i,j) in E} |i-j| / (sqrt(2) n^2), with each unordered edge
  /// summed once. The relative change of D is invariant to single- vs
  /// double-counting, so the cheaper convention is used.
  double diagonal_distance() const {
    if (edges_.empty()) return 0.0;
    long double sum = 0.0L;
    for (const Edge& e : edges_) sum += e.v - e.u;
    const long double nn = static_cast<long double>(n_) * n_;
    return static_cast<double>(sum / (std::sqrt(2.0L) * nn));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    std::vector<Edge> ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

 private:
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  void check_node(int u) const {
    if (u < 0 || u >= n_) throw NodeOutOfRange(u, n_);
  }

  void drop_neighbor(int u, int gone) {
    auto& nbrs = adj_[static_cast<std::size_t>(u)];
    auto it = std::find(nbrs.begin(), nbrs.end(), gone);
    *it = nbrs.back();
    nbrs.pop_back();
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace sfnet
