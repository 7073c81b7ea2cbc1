#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfnet/edgelist.hpp"
#include "sfnet/error.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/powerlaw.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

/// Strength of the scale-free attribute. Strong, Weak and Weakest are nested
/// (each implies the next); SuperWeak sits outside the chain and only claims
/// that the power law is not disfavored against the alternative model.
enum class Category { Strong, Weak, Weakest, SuperWeak, NonScaleFree };

inline const char* to_string(Category c) {
  switch (c) {
    case Category::Strong: return "strong";
    case Category::Weak: return "weak";
    case Category::Weakest: return "weakest";
    case Category::SuperWeak: return "super-weak";
    case Category::NonScaleFree: return "non-scale-free";
  }
  return "?";
}

inline Category category_from_string(const std::string& s) {
  if (s == "strong") return Category::Strong;
  if (s == "weak") return Category::Weak;
  if (s == "weakest") return Category::Weakest;
  if (s == "super-weak") return Category::SuperWeak;
  if (s == "non-scale-free") return Category::NonScaleFree;
  throw ConfigInvalid("unknown category '" + s + "'");
}

constexpr std::array<Category, 5> kAllCategories = {Category::Strong, Category::Weak,
                                                    Category::Weakest, Category::SuperWeak,
                                                    Category::NonScaleFree};

/// Thresholds and knobs of the classification pipeline. Defaults implement
/// the indicator table: accept the scale-free hypothesis at p >= 0.1, call a
/// tail big at n_tail >= 50, require 2 < alpha < 3 for the strong range, read
/// the likelihood-ratio sign only when significant at 0.1, and take a >= 50%
/// vote across the degree sequences of a network.
struct FitConfig {
  int bootstrap_reps = 100;
  Alternative alternative = Alternative::Exponential;
  double gof_accept = 0.1;
  int tail_min = 50;
  double alpha_lo = 2.0;
  double alpha_hi = 3.0;
  double lr_sig = 0.1;
  double majority = 0.5;
  std::uint64_t seed = 0;
  bool include_total_degree = true;  // directed inputs also score the undirected simplification
};

/// All indicators for one degree sequence. A sequence that cannot be fitted
/// (fewer than two distinct positive degrees) is marked degenerate and fails
/// every predicate.
struct SequenceVerdict {
  bool degenerate = false;
  bool lr_failed = false;  // alternative-model MLE did not converge
  TailFit fit{};
  GofResult gof{};
  LrResult lr{};

  bool gof_pass(const FitConfig& cfg) const {
    return !degenerate && gof.p_value >= cfg.gof_accept;
  }
  bool tail_big(const FitConfig& cfg) const { return !degenerate && fit.n_tail >= cfg.tail_min; }
  bool alpha_in_range(const FitConfig& cfg) const {
    return !degenerate && fit.alpha > cfg.alpha_lo && fit.alpha < cfg.alpha_hi;
  }
  bool pl_not_disfavored(const FitConfig& cfg) const {
    return !degenerate && !lr_failed && (lr.r > 0.0 || lr.p_r >= cfg.lr_sig);
  }
};

struct Classification {
  Category category = Category::NonScaleFree;
  std::vector<SequenceVerdict> verdicts;
};

inline SequenceVerdict score_sequence(const std::vector<int>& degrees, const FitConfig& cfg,
                                      std::uint64_t seed) {
  SequenceVerdict v;
  try {
    v.fit = fit_tail(degrees);
  } catch (const Error&) {
    v.degenerate = true;
    return v;
  }
  v.gof = gof_pvalue(degrees, v.fit, cfg.bootstrap_reps, seed);
  try {
    v.lr = likelihood_ratio(degrees, v.fit, cfg.alternative);
  } catch (const Error&) {
    v.lr_failed = true;
  }
  return v;
}

/// Pure category rule over stored verdicts: re-running it on the same verdicts
/// reproduces the category.
inline Category category_of(const std::vector<SequenceVerdict>& verdicts, const FitConfig& cfg) {
  if (verdicts.empty()) throw EmptySequenceSet();
  const double n = static_cast<double>(verdicts.size());
  double gof = 0, gof_tail = 0, gof_tail_alpha = 0, not_disfavored = 0;
  for (const SequenceVerdict& v : verdicts) {
    const bool g = v.gof_pass(cfg);
    const bool t = v.tail_big(cfg);
    const bool a = v.alpha_in_range(cfg);
    if (g) ++gof;
    if (g && t) ++gof_tail;
    if (g && t && a) ++gof_tail_alpha;
    if (v.pl_not_disfavored(cfg)) ++not_disfavored;
  }
  const bool super_weak = not_disfavored / n >= cfg.majority;
  const bool weakest = gof / n >= cfg.majority;
  const bool weak = weakest && gof_tail / n >= cfg.majority;
  const bool strong = weak && super_weak && gof_tail_alpha / n >= cfg.majority;
  if (strong) return Category::Strong;
  if (weak) return Category::Weak;
  if (weakest) return Category::Weakest;
  if (super_weak) return Category::SuperWeak;
  return Category::NonScaleFree;
}

/// Scores every degree sequence (sequence i uses the rng stream
/// derive_seed(cfg.seed, i)) and applies the category rule.
inline Classification classify(const std::vector<std::vector<int>>& sequences,
                               const FitConfig& cfg) {
  if (sequences.empty()) throw EmptySequenceSet();
  Classification out;
  out.verdicts.reserve(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i)
    out.verdicts.push_back(score_sequence(sequences[i], cfg, derive_seed(cfg.seed, i)));
  out.category = category_of(out.verdicts, cfg);
  return out;
}

inline Classification classify(const Graph& g, const FitConfig& cfg) {
  return classify(std::vector<std::vector<int>>{g.degree_sequence()}, cfg);
}

/// Degree-sequence extraction step. An undirected network contributes its one
/// degree sequence; a directed network contributes the in-degree and
/// out-degree sequences plus (switchable) the total-degree sequence of its
/// undirected simplification.
inline std::vector<std::vector<int>> extract_degree_sequences(const Graph& g) {
  return {g.degree_sequence()};
}

inline std::vector<std::vector<int>> extract_degree_sequences(const ArcList& arcs,
                                                              bool include_total = true) {
  std::vector<int> in_deg(static_cast<std::size_t>(arcs.n), 0);
  std::vector<int> out_deg(static_cast<std::size_t>(arcs.n), 0);
  Graph undirected(arcs.n);
  for (const auto& [s, t] : arcs.arcs) {
    ++out_deg[static_cast<std::size_t>(s)];
    ++in_deg[static_cast<std::size_t>(t)];
    if (!undirected.has_edge(s, t)) undirected.add_edge(Edge(s, t));
  }
  std::vector<std::vector<int>> out = {in_deg, out_deg};
  if (include_total) out.push_back(undirected.degree_sequence());
  return out;
}

inline std::vector<std::vector<int>> extract_degree_sequences(std::istream& in, bool directed,
                                                              bool include_total = true) {
  if (directed) return extract_degree_sequences(read_arc_list(in), include_total);
  return extract_degree_sequences(read_edge_list(in));
}

inline nlohmann::json to_json(const SequenceVerdict& v) {
  nlohmann::json j;
  if (v.degenerate) {
    j["degenerate"] = true;
    return j;
  }
  j["alpha"] = v.fit.alpha;
  j["x_min"] = v.fit.x_min;
  j["n_tail"] = v.fit.n_tail;
  j["ks"] = v.fit.ks;
  j["p"] = v.gof.p_value;
  if (v.lr_failed) {
    j["lr_failed"] = true;
  } else {
    j["r"] = v.lr.r;
    j["p_r"] = v.lr.p_r;
    j["alternative"] = to_string(v.lr.alternative);
  }
  return j;
}

inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["category"] = to_string(c.category);
  nlohmann::json seqs = nlohmann::json::array();
  for (const SequenceVerdict& v : c.verdicts) seqs.push_back(to_json(v));
  j["sequences"] = seqs;
  return j;
}

}  // namespace sfnet
