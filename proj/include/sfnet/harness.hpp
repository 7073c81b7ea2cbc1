#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "sfnet/attacks.hpp"
#include "sfnet/classifier.hpp"
#include "sfnet/edgelist.hpp"
#include "sfnet/error.hpp"
#include "sfnet/generators.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/report.hpp"
#include "sfnet/rng.hpp"
#include "sfnet/svg.hpp"

namespace sfnet {

constexpr int kSchemaVersion = 1;

namespace detail {

/// Runs task(0..count-1) on `jobs` workers. Tasks own disjoint result slots
/// and derive their seeds from their index, so scheduling cannot change any
/// output. The first exception wins and is rethrown after the pool drains.
template <class Task>
void run_parallel(int jobs, std::size_t count, Task&& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const int workers = std::min<int>(jobs, static_cast<int>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

inline std::string network_file_name(int n, int index) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "ba_n%d_%03d.edges", n, index);
  return buf;
}

/// Timestamps are confined to meta.json so every data artifact is a pure
/// function of (config, seed).
inline void write_meta(const std::string& dir, const nlohmann::json& config_echo) {
  nlohmann::json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["tool"] = "sfnet";
  meta["created_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  meta["config"] = config_echo;
  write_text_file(dir + "/meta.json", meta.dump(2) + "\n");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateConfig {
  std::vector<int> sizes = {500};
  int count = 30;  // networks per size
  int m_attach = 2;
  std::uint64_t seed = 0;
  std::string out_dir;
  FitConfig fit{};
  int jobs = 1;
};

struct NetworkEntry {
  std::string file;
  int n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  Classification classification{};
};

struct GenerateReport {
  std::vector<NetworkEntry> networks;
  std::map<int, std::map<std::string, double>> fractions;  // size -> category name -> fraction
  std::string manifest_path;
};

/// Generates `count` BA networks per size, persists each as an edge list,
/// classifies it, and writes a manifest with the verdicts and per-category
/// fractions. Network (size s, index i) is generated from
/// derive_seed(seed, s, i) and classified with derive_seed(seed, s, i, 7).
inline GenerateReport cmd_generate(const GenerateConfig& cfg) {
  if (cfg.sizes.empty()) throw ConfigInvalid("no sizes given");
  if (cfg.count <= 0) throw ConfigInvalid("count must be >= 1");
  detail::ensure_dir(cfg.out_dir);

  struct TaskSpec {
    int n;
    int index;
  };
  std::vector<TaskSpec> specs;
  for (int n : cfg.sizes)
    for (int i = 0; i < cfg.count; ++i) specs.push_back({n, i});

  GenerateReport report;
  report.networks.resize(specs.size());
  detail::run_parallel(cfg.jobs, specs.size(), [&](std::size_t t) {
    const TaskSpec spec = specs[t];
    BaConfig ba;
    ba.n = spec.n;
    ba.m_attach = cfg.m_attach;
    ba.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(spec.n),
                          static_cast<std::uint64_t>(spec.index));
    const Graph g = generate_ba(ba);
    NetworkEntry entry;
    entry.file = detail::network_file_name(spec.n, spec.index);
    entry.n = spec.n;
    entry.m = g.edge_count();
    entry.seed = ba.seed;
    write_edge_list_file(g, cfg.out_dir + "/" + entry.file);
    FitConfig fit = cfg.fit;
    fit.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(spec.n),
                           static_cast<std::uint64_t>(spec.index), 7);
    entry.classification = classify(g, fit);
    report.networks[t] = std::move(entry);
  });

  for (int n : cfg.sizes) {
    auto& frac = report.fractions[n];
    for (Category c : kAllCategories) frac[to_string(c)] = 0.0;
    for (const NetworkEntry& e : report.networks)
      if (e.n == n) frac[to_string(e.classification.category)] += 1.0;
    for (auto& [name, v] : frac) v /= cfg.count;
  }

  nlohmann::json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["kind"] = "sfnet-dataset";
  manifest["base_seed"] = cfg.seed;
  manifest["m_attach"] = cfg.m_attach;
  manifest["bootstrap_reps"] = cfg.fit.bootstrap_reps;
  manifest["count_per_size"] = cfg.count;
  manifest["sizes"] = cfg.sizes;
  nlohmann::json nets = nlohmann::json::array();
  for (const NetworkEntry& e : report.networks) {
    nlohmann::json j;
    j["file"] = e.file;
    j["n"] = e.n;
    j["m"] = e.m;
    j["seed"] = e.seed;
    j["category"] = to_string(e.classification.category);
    j["verdict"] = to_json(e.classification);
    nets.push_back(j);
  }
  manifest["networks"] = nets;
  nlohmann::json fr;
  for (const auto& [n, m] : report.fractions) fr[std::to_string(n)] = m;
  manifest["fractions"] = fr;

  report.manifest_path = cfg.out_dir + "/manifest.json";
  detail::write_text_file(report.manifest_path, manifest.dump(2) + "\n");

  nlohmann::json echo;
  echo["command"] = "generate";
  echo["sizes"] = cfg.sizes;
  echo["count"] = cfg.count;
  echo["seed"] = cfg.seed;
  echo["bootstrap_reps"] = cfg.fit.bootstrap_reps;
  detail::write_meta(cfg.out_dir, echo);
  return report;
}

// ---------------------------------------------------------------------------
// attack
// ---------------------------------------------------------------------------

struct AttackPlanConfig {
  std::string dataset_dir;
  std::string out_dir;
  std::vector<Strategy> strategies = {Strategy::Rlr, Strategy::Dalr, Strategy::Dilr};
  int repetitions = 20;
  int networks_per_size = 0;  // 0 = every strong network in the dataset
  DilrConfig dilr{};
  FitConfig fit{};  // screen-level thresholds and bootstrap reps
  int confirm_reps = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t max_steps = 0;  // 0 = |E| of each network
  bool save_adversarial = false;
  bool save_step_logs = false;
};

struct AttackReport {
  std::vector<RunRecord> records;  // canonical (network, strategy, repetition) order
  std::vector<SummaryRow> summary;
  std::size_t networks_attacked = 0;
};

namespace detail {

struct StrongNetworkRef {
  int manifest_index = 0;
  std::string file;
  int n = 0;
};

inline std::vector<StrongNetworkRef> load_strong_networks(const std::string& dataset_dir,
                                                          int per_size) {
  const std::string manifest_path = dataset_dir + "/manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot open " + manifest_path);
  nlohmann::json manifest;
  in >> manifest;
  if (!manifest.contains("schema_version") ||
      manifest["schema_version"].get<int>() != kSchemaVersion)
    throw ConfigInvalid("unsupported manifest schema in " + manifest_path);

  std::map<int, int> taken;
  std::vector<StrongNetworkRef> strong;
  const auto& nets = manifest["networks"];
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const auto& j = nets[i];
    if (category_from_string(j["category"].get<std::string>()) != Category::Strong) continue;
    const int n = j["n"].get<int>();
    if (per_size > 0 && taken[n] >= per_size) continue;
    ++taken[n];
    strong.push_back({static_cast<int>(i), j["file"].get<std::string>(), n});
  }
  if (strong.empty()) throw NoStrongNetworks();
  return strong;
}

}  // namespace detail

/// Attacks every selected strong network with every strategy for the given
/// number of repetitions and writes outcomes.csv, summary.csv and violins.csv.
/// The run for (network index i, strategy s, repetition r) uses the seed
/// derive_seed(seed, i, s, r); rows come out in canonical order whatever the
/// worker count, so serial and parallel runs are byte-identical.
inline AttackReport cmd_attack(const AttackPlanConfig& cfg) {
  if (cfg.repetitions < 1) throw ConfigInvalid("repetitions must be >= 1");
  if (cfg.strategies.empty()) throw ConfigInvalid("no strategies selected");
  const auto strong = detail::load_strong_networks(cfg.dataset_dir, cfg.networks_per_size);
  detail::ensure_dir(cfg.out_dir);
  if (cfg.save_step_logs) detail::ensure_dir(cfg.out_dir + "/logs");
  if (cfg.save_adversarial) detail::ensure_dir(cfg.out_dir + "/adversarial");

  std::vector<Strategy> strategies = cfg.strategies;
  std::sort(strategies.begin(), strategies.end());
  strategies.erase(std::unique(strategies.begin(), strategies.end()), strategies.end());

  std::vector<Graph> graphs;
  graphs.reserve(strong.size());
  for (const auto& ref : strong) graphs.push_back(read_edge_list_file(cfg.dataset_dir + "/" + ref.file));

  struct TaskSpec {
    std::size_t net;
    Strategy strategy;
    int rep;
  };
  std::vector<TaskSpec> specs;
  for (std::size_t ni = 0; ni < strong.size(); ++ni)
    for (Strategy s : strategies)
      for (int r = 0; r < cfg.repetitions; ++r) specs.push_back({ni, s, r});

  AttackReport report;
  report.networks_attacked = strong.size();
  report.records.resize(specs.size());
  detail::run_parallel(cfg.jobs, specs.size(), [&](std::size_t t) {
    const TaskSpec spec = specs[t];
    const auto& ref = strong[spec.net];
    AttackConfig run;
    run.fit = cfg.fit;
    run.confirm_reps = cfg.confirm_reps;
    run.dilr = cfg.dilr;
    run.max_steps = cfg.max_steps;
    run.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(ref.manifest_index),
                           static_cast<std::uint64_t>(spec.strategy),
                           static_cast<std::uint64_t>(spec.rep));
    // the dataset manifest already confirmed the strong category
    run.initial_check = InitialCheck::Screen;
    run.log_steps = cfg.save_step_logs || cfg.save_adversarial;

    RunRecord rec;
    rec.network_index = ref.manifest_index;
    rec.size_n = ref.n;
    rec.edges = graphs[spec.net].edge_count();
    rec.strategy = spec.strategy;
    rec.repetition = spec.rep;
    rec.outcome = attack_until_exit(graphs[spec.net], spec.strategy, run);

    char tag[96];
    std::snprintf(tag, sizeof(tag), "net%03d_%s_rep%03d", ref.manifest_index,
                  to_string(spec.strategy), spec.rep);
    if (cfg.save_step_logs) {
      std::ofstream log(cfg.out_dir + "/logs/" + tag + ".jsonl");
      write_step_log(rec.outcome.step_log, log);
    }
    if (cfg.save_adversarial) {
      Graph adv = graphs[spec.net];
      for (const RewiringStep& s : rec.outcome.step_log) apply_step(adv, s);
      write_edge_list_file(adv, cfg.out_dir + "/adversarial/" + tag + ".edges");
    }
    if (!cfg.save_step_logs) rec.outcome.step_log.clear();
    report.records[t] = std::move(rec);
  });

  report.summary = aggregate(report.records);
  {
    std::ofstream out(cfg.out_dir + "/outcomes.csv", std::ios::binary);
    write_outcomes_csv(report.records, out);
  }
  {
    std::ofstream out(cfg.out_dir + "/summary.csv", std::ios::binary);
    write_summary_csv(report.summary, out);
  }
  {
    std::ofstream out(cfg.out_dir + "/violins.csv", std::ios::binary);
    write_violins_csv(report.records, out);
  }

  nlohmann::json echo;
  echo["command"] = "attack";
  echo["dataset"] = cfg.dataset_dir;
  echo["seed"] = cfg.seed;
  echo["repetitions"] = cfg.repetitions;
  echo["networks_attacked"] = report.networks_attacked;
  nlohmann::json strat_names = nlohmann::json::array();
  for (Strategy s : strategies) strat_names.push_back(to_string(s));
  echo["strategies"] = strat_names;
  detail::write_meta(cfg.out_dir, echo);
  return report;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

/// Classifies one edge-list file; --directed inputs contribute in-, out- and
/// (optionally) total-degree sequences.
inline Classification cmd_classify(const std::string& path, bool directed, const FitConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  const auto sequences = extract_degree_sequences(in, directed, cfg.include_total_degree);
  return classify(sequences, cfg);
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

struct PlotReport {
  std::vector<std::string> files;
};

namespace detail {

struct ViolinRow {
  std::string metric, phase, strategy;
  double value;
};

inline std::vector<ViolinRow> read_violins_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EmptyInput("no violins.csv under results directory");
  std::vector<ViolinRow> rows;
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ss(line);
    ViolinRow row;
    std::string value;
    if (!std::getline(ss, row.metric, ',') || !std::getline(ss, row.phase, ',') ||
        !std::getline(ss, row.strategy, ',') || !std::getline(ss, value))
      throw ParseError(line_no, "bad violins.csv row: '" + line + "'");
    row.value = std::stod(value);
    rows.push_back(row);
  }
  return rows;
}

inline int strategy_rank(const std::string& s) {
  if (s == "rlr") return 0;
  if (s == "dalr") return 1;
  if (s == "dilr") return 2;
  return 3;
}

}  // namespace detail

/// Renders one violin SVG per metric found in results_dir/violins.csv
/// (original vs adversarial per strategy) and a log-log degree CCDF for every
/// extra edge-list file supplied. Byte-identical on repeated invocation.
inline PlotReport cmd_plot(const std::string& results_dir, const std::string& out_dir,
                           const std::vector<std::string>& edge_files = {}) {
  const auto rows = detail::read_violins_csv(results_dir + "/violins.csv");
  if (rows.empty() && edge_files.empty()) throw EmptyInput("results contain no violin samples");
  detail::ensure_dir(out_dir);
  PlotReport report;

  std::vector<std::string> metrics;
  for (const auto& r : rows)
    if (std::find(metrics.begin(), metrics.end(), r.metric) == metrics.end())
      metrics.push_back(r.metric);
  std::sort(metrics.begin(), metrics.end());

  for (const std::string& metric : metrics) {
    // group key ordered by (strategy rank, phase) with original before
    // adversarial, matching how the figures read
    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& r : rows) {
      if (r.metric != metric) continue;
      const auto key = std::make_pair(r.strategy, r.phase);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
      const int ra = detail::strategy_rank(a.first), rb = detail::strategy_rank(b.first);
      if (ra != rb) return ra < rb;
      if (a.first != b.first) return a.first < b.first;
      return (a.second == "original" ? 0 : 1) < (b.second == "original" ? 0 : 1);
    });
    std::vector<ViolinGroup> groups;
    for (const auto& [strategy, phase] : keys) {
      ViolinGroup g;
      g.label = strategy + " " + (phase == "original" ? "orig" : "adv");
      for (const auto& r : rows)
        if (r.metric == metric && r.strategy == strategy && r.phase == phase)
          g.values.push_back(r.value);
      groups.push_back(std::move(g));
    }
    const std::string path = out_dir + "/violin_" + metric + ".svg";
    detail::write_text_file(path, render_violin_svg(metric, groups));
    report.files.push_back(path);
  }

  for (const std::string& edges_path : edge_files) {
    const Graph g = read_edge_list_file(edges_path);
    const std::string stem = std::filesystem::path(edges_path).stem().string();
    const std::string path = out_dir + "/degree_ccdf_" + stem + ".svg";
    detail::write_text_file(path, render_degree_ccdf_svg(stem, g.degree_sequence()));
    report.files.push_back(path);
  }
  return report;
}

}  // namespace sfnet
