#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sfnet/error.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

/// Barabasi-Albert generator parameters. m_attach = 2 gives |E| = 2n - 3,
/// matching an experiment design with roughly 2n links.
struct BaConfig {
  int n = 0;
  int m_attach = 2;
  std::uint64_t seed = 0;
};

/// Preferential attachment starting from a complete seed graph on
/// m_attach + 1 nodes. Each new node connects to m_attach distinct existing
/// nodes drawn proportionally to current degree (without replacement within a
/// step, by rejection). Output is connected, has min degree >= m_attach and
/// exactly m(m+1)/2 + m(n - m - 1) edges.
///
/// Node labels are a seeded permutation of the attachment order. Raw
/// attachment order puts every hub at a small index, which correlates |i - j|
/// with degree and lets degree-targeted rewiring drag the diagonal distance
/// far more than link replacement itself warrants. Labels are fixed at
/// generation time and never re-indexed afterwards, so D stays comparable
/// across an attack.
inline Graph generate_ba(const BaConfig& cfg) {
  const int m = cfg.m_attach;
  if (m < 1) throw ConfigInvalid("m_attach must be >= 1");
  if (cfg.n <= m + 1) throw ConfigInvalid("n must exceed m_attach + 1");
  Rng rng(cfg.seed);

  // urn holds each node id once per unit of degree
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(cfg.n));
  std::vector<int> urn;
  urn.reserve(static_cast<std::size_t>(2 * m) * static_cast<std::size_t>(cfg.n));
  for (int u = 0; u <= m; ++u) {
    for (int v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
    for (int c = 0; c < m; ++c) urn.push_back(u);
  }

  std::vector<int> targets;
  for (int t = m + 1; t < cfg.n; ++t) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int cand = urn[rng.below(urn.size())];
      if (std::find(targets.begin(), targets.end(), cand) == targets.end())
        targets.push_back(cand);
    }
    for (int tgt : targets) {
      edges.emplace_back(t, tgt);
      urn.push_back(tgt);
      urn.push_back(t);
    }
  }

  std::vector<int> label(static_cast<std::size_t>(cfg.n));
  for (int u = 0; u < cfg.n; ++u) label[static_cast<std::size_t>(u)] = u;
  for (std::size_t i = label.size(); i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);

  Graph g(cfg.n);
  for (const auto& [a, b] : edges)
    g.add_edge(Edge(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]));
  return g;
}

namespace detail {

/// Erdos-Gallai graphicality test on a degree sequence (non-negative ints).
inline bool is_graphical(std::vector<int> degs) {
  const std::size_t n = degs.size();
  long long sum = std::accumulate(degs.begin(), degs.end(), 0LL);
  if (sum % 2 != 0) return false;
  for (int d : degs)
    if (d < 0 || d >= static_cast<int>(n)) return false;
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  long long lhs = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    lhs += degs[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (std::size_t i = k; i < n; ++i) rhs += std::min<long long>(degs[i], static_cast<long long>(k));
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace detail

/// Configuration-model realization of a degree sequence: stub matching with
/// whole-attempt rejection of self-loops and multi-edges.
inline Graph generate_configuration_model(const std::vector<int>& degrees, Rng& rng,
                                          int max_attempts = 1000) {
  if (!detail::is_graphical(degrees)) throw NotGraphical();
  const int n = static_cast<int>(degrees.size());
  std::vector<int> stubs;
  for (int u = 0; u < n; ++u)
    for (int c = 0; c < degrees[static_cast<std::size_t>(u)]; ++c) stubs.push_back(u);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Fisher-Yates with the library rng so realizations are reproducible
    for (std::size_t i = stubs.size(); i > 1; --i) {
      const std::size_t j = rng.below(i);
      std::swap(stubs[i - 1], stubs[j]);
    }
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int a = stubs[i], b = stubs[i + 1];
      if (a == b || g.has_edge(a, b)) {
        ok = false;
        break;
      }
      g.add_edge(Edge(a, b));
    }
    if (ok) return g;
  }
  throw RetriesExhausted(max_attempts);
}

}  // namespace sfnet
