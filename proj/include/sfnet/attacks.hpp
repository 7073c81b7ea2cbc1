#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfnet/classifier.hpp"
#include "sfnet/error.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/metrics.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

enum class Strategy { Rlr, Dalr, Dilr };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Rlr: return "rlr";
    case Strategy::Dalr: return "dalr";
    case Strategy::Dilr: return "dilr";
  }
  return "?";
}

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "rlr" || s == "RLR") return Strategy::Rlr;
  if (s == "dalr" || s == "DALR") return Strategy::Dalr;
  if (s == "dilr" || s == "DILR") return Strategy::Dilr;
  throw ConfigInvalid("unknown strategy '" + s + "'");
}

/// One rewiring action: deleted must be in E and added in the complement at
/// the moment the step is taken; applying it keeps |E| unchanged.
struct RewiringStep {
  Edge deleted;
  Edge added;
};

inline void apply_step(Graph& g, const RewiringStep& s) {
  g.remove_edge(s.deleted);
  g.add_edge(s.added);
}

/// Random link rewiring: deleted uniform over E (drawn first), added uniform
/// over the complement set.
inline RewiringStep rlr_step(const Graph& g, Rng& rng) {
  if (g.edge_count() == 0) throw NoEdges();
  if (g.is_complete()) throw GraphComplete();
  const Edge deleted = g.edges()[rng.below(g.edge_count())];
  const Edge added = g.sample_non_edge(rng);
  return RewiringStep{deleted, added};
}

namespace detail {

/// Smallest degree among nodes not adjacent to u (and not u itself), where
/// order lists all nodes sorted ascending by (degree, id). Scans past at most
/// deg(u) + 1 entries.
inline int min_nonneighbor_degree(const Graph& g, int u, const std::vector<int>& order) {
  for (int cand : order) {
    if (cand == u || g.has_edge(u, cand)) continue;
    return g.degree(cand);
  }
  return -1;  // u is adjacent to every other node
}

/// Tie key for the DALR add rule. Minimum-degree-sum pairs come in the
/// thousands on a scale-free graph, and any id-ordered tie-break concentrates
/// additions in one corner of the adjacency matrix, dragging the diagonal
/// distance far more than the rewiring itself warrants. Hashing keeps the
/// choice deterministic while uncorrelated with node position.
inline std::uint64_t dalr_tie_key(int node) {
  return splitmix64(static_cast<std::uint64_t>(node) + 0x51ed270b5d3ab367ull);
}

}  // namespace detail

/// Degree-addition-based link rewiring. Deletes the edge with the largest
/// degree sum d_i + d_j (ties: lexicographically smallest canonical pair) and
/// reconnects an unconnected pair attaining the smallest degree sum (ties:
/// deterministic hash of the node ids); both ranked on the degrees at step
/// start.
inline RewiringStep dalr_step(const Graph& g) {
  if (g.edge_count() == 0) throw NoEdges();
  if (g.is_complete()) throw GraphComplete();
  const int n = g.node_count();

  Edge deleted = g.edges().front();
  int del_sum = -1;
  for (const Edge& e : g.edges()) {
    const int s = g.degree(e.u) + g.degree(e.v);
    if (s > del_sum || (s == del_sum && e < deleted)) {
      del_sum = s;
      deleted = e;
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) order[static_cast<std::size_t>(u)] = u;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b; });

  int best_sum = -1;
  for (int u = 0; u < n; ++u) {
    const int partner = detail::min_nonneighbor_degree(g, u, order);
    if (partner < 0) continue;
    const int s = g.degree(u) + partner;
    if (best_sum < 0 || s < best_sum) best_sum = s;
  }

  // nodes bucketed by degree value; filling from `order` leaves each bucket
  // id-ascending
  std::vector<std::vector<int>> by_degree(static_cast<std::size_t>(n));
  for (int u : order) by_degree[static_cast<std::size_t>(g.degree(u))].push_back(u);

  // endpoint with a valid partner and the smallest tie key wins
  int best_u = -1;
  std::uint64_t best_u_key = 0;
  for (int u = 0; u < n; ++u) {
    const int need = best_sum - g.degree(u);
    if (need < 0 || need >= n) continue;
    const std::uint64_t key = detail::dalr_tie_key(u);
    if (best_u >= 0 && key >= best_u_key) continue;
    for (int v : by_degree[static_cast<std::size_t>(need)]) {
      if (v == u || g.has_edge(u, v)) continue;
      best_u = u;
      best_u_key = key;
      break;
    }
  }
  if (best_u < 0) throw GraphComplete();  // unreachable: a best_sum non-edge exists

  const int need = best_sum - g.degree(best_u);
  int best_v = -1;
  std::uint64_t best_v_key = 0;
  for (int v : by_degree[static_cast<std::size_t>(need)]) {
    if (v == best_u || g.has_edge(best_u, v)) continue;
    const std::uint64_t key = detail::dalr_tie_key(v);
    if (best_v < 0 || key < best_v_key) {
      best_v = v;
      best_v_key = key;
    }
  }
  return RewiringStep{deleted, Edge(best_u, best_v)};
}

/// DILR degree intervals: gamma and beta are node-rank fractions, so V_L holds
/// the top ceil(gamma n) nodes in (degree desc, id asc) order and V_M the rank
/// positions from there down to floor(beta n).
struct DilrConfig {
  double gamma = 0.20;
  double beta = 0.50;
};

struct DegreeIntervals {
  std::vector<int> large;   // V_L
  std::vector<int> medium;  // V_M
};

inline DegreeIntervals degree_intervals(const Graph& g, const DilrConfig& cfg) {
  if (!(cfg.gamma > 0.0) || !(cfg.gamma < cfg.beta) || !(cfg.beta <= 1.0))
    throw ConfigInvalid("DILR intervals need 0 < gamma < beta <= 1");
  const int n = g.node_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) order[static_cast<std::size_t>(u)] = u;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
  // the 1e-9 nudges keep ceil/floor stable when gamma*n is representable only
  // approximately (e.g. 0.2 * 500)
  const int n_large = static_cast<int>(std::ceil(cfg.gamma * n - 1e-9));
  const int m_end = std::min(n, static_cast<int>(std::floor(cfg.beta * n + 1e-9)));
  DegreeIntervals iv;
  for (int i = 0; i < std::min(n, n_large); ++i) iv.large.push_back(order[static_cast<std::size_t>(i)]);
  for (int i = n_large; i < m_end; ++i) iv.medium.push_back(order[static_cast<std::size_t>(i)]);
  return iv;
}

/// Degree-interval-based link rewiring. Deletes the link between a uniformly
/// chosen large-degree node and its highest-degree neighbor (which may or may
/// not be in V_L itself), and adds a uniformly chosen missing link between two
/// medium-degree nodes.
inline RewiringStep dilr_step(const Graph& g, const DilrConfig& cfg, Rng& rng) {
  const DegreeIntervals iv = degree_intervals(g, cfg);

  std::vector<int> eligible;
  for (int u : iv.large)
    if (g.degree(u) > 0) eligible.push_back(u);
  if (eligible.empty()) throw NoHubEdge();
  const int vi = eligible[rng.below(eligible.size())];
  int vj = -1;
  for (int w : g.neighbors(vi)) {
    if (vj < 0 || g.degree(w) > g.degree(vj) || (g.degree(w) == g.degree(vj) && w < vj)) vj = w;
  }
  const Edge deleted(vi, vj);

  const std::size_t m_count = iv.medium.size();
  if (m_count < 2) throw NoMediumNonEdge();
  std::vector<char> in_medium(static_cast<std::size_t>(g.node_count()), 0);
  for (int u : iv.medium) in_medium[static_cast<std::size_t>(u)] = 1;
  std::size_t internal_edges = 0;
  for (int u : iv.medium)
    for (int w : g.neighbors(u))
      if (in_medium[static_cast<std::size_t>(w)]) ++internal_edges;
  internal_edges /= 2;
  if (internal_edges == m_count * (m_count - 1) / 2) throw NoMediumNonEdge();

  for (;;) {
    const int a = iv.medium[rng.below(m_count)];
    const int b = iv.medium[rng.below(m_count)];
    if (a == b || g.has_edge(a, b)) continue;
    return RewiringStep{deleted, Edge(a, b)};
  }
}

inline RewiringStep attack_step(const Graph& g, Strategy strat, const DilrConfig& dilr, Rng& rng) {
  switch (strat) {
    case Strategy::Rlr: return rlr_step(g, rng);
    case Strategy::Dalr: return dalr_step(g);
    case Strategy::Dilr: return dilr_step(g, dilr, rng);
  }
  throw ConfigInvalid("unknown strategy");
}

enum class InitialCheck {
  Full,    // classify the input and require Strong (the default contract)
  Screen,  // only the deterministic alpha / n_tail screen
  Skip     // trust the caller (dataset already classified)
};

struct AttackConfig {
  FitConfig fit{};          // thresholds + screen-level bootstrap reps
  int confirm_reps = 100;   // bootstrap reps for exit-confirming classification
  DilrConfig dilr{};
  std::size_t max_steps = 0;  // 0 means |E|: one rewiring per link on average
  std::uint64_t seed = 0;
  InitialCheck initial_check = InitialCheck::Full;
  bool log_steps = false;
};

/// Per-run attack record.
struct AttackOutcome {
  Strategy strategy = Strategy::Rlr;
  std::size_t steps = 0;  // m_R, number of rewiring steps taken
  double delta_m = 0.0;   // steps / |E|
  Category terminal = Category::Strong;
  bool aborted = false;  // hit max_steps without leaving the strong category
  ConcealmentReport concealment{};
  std::uint64_t seed = 0;
  std::vector<RewiringStep> step_log;  // filled when AttackConfig::log_steps
};

namespace detail {

/// Cheap strong-membership screen: the deterministic indicators only. The
/// bootstrap p and the ratio R are left to the full classification that
/// confirms an exit.
inline bool screen_strong(const Graph& g, const FitConfig& cfg) {
  try {
    const TailFit fit = fit_tail(g.degree_sequence());
    return fit.alpha > cfg.alpha_lo && fit.alpha < cfg.alpha_hi && fit.n_tail >= cfg.tail_min;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace detail

/// Rewires with the chosen strategy until the graph leaves the strong
/// category. After every step the deterministic screen runs; when it trips,
/// a full classification (confirm_reps bootstrap) assigns the terminal
/// category. Runs that exhaust max_steps are flagged aborted instead of
/// looping forever. Everything derives from cfg.seed, so a rerun with the
/// same inputs reproduces the outcome bit for bit.
inline AttackOutcome attack_until_exit(const Graph& input, Strategy strat,
                                       const AttackConfig& cfg) {
  if (cfg.max_steps == 0 && input.edge_count() == 0) throw NoEdges();
  switch (cfg.initial_check) {
    case InitialCheck::Full: {
      FitConfig f = cfg.fit;
      f.seed = derive_seed(cfg.seed, 0);
      if (classify(input, f).category != Category::Strong) throw NotStrongInitially();
      break;
    }
    case InitialCheck::Screen:
      if (!detail::screen_strong(input, cfg.fit)) throw NotStrongInitially();
      break;
    case InitialCheck::Skip:
      break;
  }

  Graph g = input;
  Rng rng(derive_seed(cfg.seed, 1));  // stream 1: strategy randomness
  const std::size_t max_steps = cfg.max_steps ? cfg.max_steps : input.edge_count();

  AttackOutcome out;
  out.strategy = strat;
  out.seed = cfg.seed;

  std::size_t step = 0;
  bool exited = false;
  while (step < max_steps) {
    const RewiringStep s = attack_step(g, strat, cfg.dilr, rng);
    apply_step(g, s);
    ++step;
    if (cfg.log_steps) out.step_log.push_back(s);
    if (!detail::screen_strong(g, cfg.fit)) {
      FitConfig f = cfg.fit;
      f.bootstrap_reps = cfg.confirm_reps;
      f.seed = derive_seed(cfg.seed, 2, step);  // stream 2: confirmation at this step
      const Category c = classify(g, f).category;
      if (c != Category::Strong) {
        out.terminal = c;
        exited = true;
        break;
      }
    }
  }

  out.steps = step;
  out.delta_m = effectiveness(step, input.edge_count());
  if (!exited) {
    out.aborted = true;
    FitConfig f = cfg.fit;
    f.bootstrap_reps = cfg.confirm_reps;
    f.seed = derive_seed(cfg.seed, 2, step);
    out.terminal = classify(g, f).category;
  }
  out.concealment = concealment(input, g);
  return out;
}

/// Step-log line: {"step": i, "deleted": [u, v], "added": [u, v]}.
inline void write_step_log(const std::vector<RewiringStep>& steps, std::ostream& out) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    nlohmann::json j;
    j["step"] = i + 1;
    j["deleted"] = {steps[i].deleted.u, steps[i].deleted.v};
    j["added"] = {steps[i].added.u, steps[i].added.v};
    out << j.dump() << "\n";
  }
}

}  // namespace sfnet
