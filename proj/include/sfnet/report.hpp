#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "sfnet/attacks.hpp"
#include "sfnet/error.hpp"

namespace sfnet {

/// One attack run with its experiment coordinates.
struct RunRecord {
  int network_index = 0;  // position in the dataset manifest
  int size_n = 0;
  std::size_t edges = 0;
  Strategy strategy = Strategy::Rlr;
  int repetition = 0;
  AttackOutcome outcome{};
};

/// A summary table row: one (size, strategy, terminal-category) cell or the
/// per-(size, strategy) overall line. Aborted runs are excluded from every
/// mean and frequency; their count is carried on the overall row.
struct SummaryRow {
  int size_n = 0;
  Strategy strategy = Strategy::Rlr;
  std::optional<Category> group;  // nullopt = overall
  std::size_t count = 0;
  std::size_t aborted = 0;
  double freq = 0.0;
  std::optional<double> mean_delta_m, mean_delta_l, mean_delta_c, mean_delta_d;
};

namespace detail {

struct Accum {
  std::size_t n = 0;
  double sum = 0.0;
  void add(double x) {
    ++n;
    sum += x;
  }
  void add(const std::optional<double>& x) {
    if (x) add(*x);
  }
  std::optional<double> mean() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

struct GroupStats {
  std::size_t count = 0;
  Accum dm, dl, dc, dd;
  void add(const AttackOutcome& o) {
    ++count;
    dm.add(o.delta_m);
    dl.add(o.concealment.delta_l);
    dc.add(o.concealment.delta_c);
    dd.add(o.concealment.delta_d);
  }
};

inline std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

inline std::string fmt_opt(const std::optional<double>& x) { return x ? fmt_g(*x) : "--"; }

}  // namespace detail

/// Folds run records into the summary-table shape: per (size, strategy) one
/// row per terminal category (skipping Strong, which only aborted runs can
/// report) plus an overall row. Categories nobody reached keep count 0 and
/// "--" means.
inline std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw EmptyInput("no attack outcomes");
  std::map<std::pair<int, int>, std::map<Category, detail::GroupStats>> cells;
  std::map<std::pair<int, int>, detail::GroupStats> overall;
  std::map<std::pair<int, int>, std::size_t> aborted;
  for (const RunRecord& r : records) {
    const auto key = std::make_pair(r.size_n, static_cast<int>(r.strategy));
    if (r.outcome.aborted) {
      ++aborted[key];
      overall[key];  // materialize the group even if every run aborted
      continue;
    }
    cells[key][r.outcome.terminal].add(r.outcome);
    overall[key].add(r.outcome);
  }

  std::vector<SummaryRow> rows;
  for (const auto& [key, stats] : overall) {
    const auto total = stats.count;
    for (Category c : kAllCategories) {
      if (c == Category::Strong) continue;
      SummaryRow row;
      row.size_n = key.first;
      row.strategy = static_cast<Strategy>(key.second);
      row.group = c;
      auto cell_it = cells.find(key);
      if (cell_it != cells.end()) {
        auto it = cell_it->second.find(c);
        if (it != cell_it->second.end()) {
          row.count = it->second.count;
          row.freq = total ? static_cast<double>(row.count) / static_cast<double>(total) : 0.0;
          row.mean_delta_m = it->second.dm.mean();
          row.mean_delta_l = it->second.dl.mean();
          row.mean_delta_c = it->second.dc.mean();
          row.mean_delta_d = it->second.dd.mean();
        }
      }
      rows.push_back(row);
    }
    SummaryRow all;
    all.size_n = key.first;
    all.strategy = static_cast<Strategy>(key.second);
    all.count = total;
    all.freq = total ? 1.0 : 0.0;
    auto ab = aborted.find(key);
    all.aborted = ab == aborted.end() ? 0 : ab->second;
    all.mean_delta_m = stats.dm.mean();
    all.mean_delta_l = stats.dl.mean();
    all.mean_delta_c = stats.dc.mean();
    all.mean_delta_d = stats.dd.mean();
    rows.push_back(all);
  }
  return rows;
}

inline void write_outcomes_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << "network,size,strategy,repetition,seed,edges,steps,delta_m,aborted,terminal,"
         "l_before,l_after,c_before,c_after,d_before,d_after,"
         "delta_l,delta_c,delta_d,pairs_before,pairs_after\n";
  for (const RunRecord& r : records) {
    const AttackOutcome& o = r.outcome;
    const ConcealmentReport& c = o.concealment;
    out << r.network_index << ',' << r.size_n << ',' << to_string(r.strategy) << ','
        << r.repetition << ',' << o.seed << ',' << r.edges << ',' << o.steps << ','
        << detail::fmt_g(o.delta_m) << ',' << (o.aborted ? 1 : 0) << ',' << to_string(o.terminal)
        << ',' << detail::fmt_g(c.l_before) << ',' << detail::fmt_g(c.l_after) << ','
        << detail::fmt_g(c.c_before) << ',' << detail::fmt_g(c.c_after) << ','
        << detail::fmt_g(c.d_before) << ',' << detail::fmt_g(c.d_after) << ','
        << detail::fmt_opt(c.delta_l) << ',' << detail::fmt_opt(c.delta_c) << ','
        << detail::fmt_opt(c.delta_d) << ',' << c.pairs_before << ',' << c.pairs_after << "\n";
  }
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "size,strategy,group,count,aborted,freq,mean_delta_m,mean_delta_l,mean_delta_c,"
         "mean_delta_d\n";
  for (const SummaryRow& r : rows) {
    out << r.size_n << ',' << to_string(r.strategy) << ','
        << (r.group ? to_string(*r.group) : "overall") << ',' << r.count << ',' << r.aborted
        << ',' << detail::fmt_g(r.freq) << ',' << detail::fmt_opt(r.mean_delta_m) << ','
        << detail::fmt_opt(r.mean_delta_l) << ',' << detail::fmt_opt(r.mean_delta_c) << ','
        << detail::fmt_opt(r.mean_delta_d) << "\n";
  }
}

/// Raw samples behind the violin plots: the three structural properties of
/// each successfully attacked network, before and after the attack.
inline void write_violins_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << "metric,phase,strategy,value\n";
  const auto emit = [&](const char* metric, const char* phase, Strategy s, double v) {
    out << metric << ',' << phase << ',' << to_string(s) << ',' << detail::fmt_g(v) << "\n";
  };
  for (const RunRecord& r : records) {
    if (r.outcome.aborted) continue;
    const ConcealmentReport& c = r.outcome.concealment;
    emit("L", "original", r.strategy, c.l_before);
    emit("L", "adversarial", r.strategy, c.l_after);
    emit("C", "original", r.strategy, c.c_before);
    emit("C", "adversarial", r.strategy, c.c_after);
    emit("D", "original", r.strategy, c.d_before);
    emit("D", "adversarial", r.strategy, c.d_after);
  }
}

}  // namespace sfnet
