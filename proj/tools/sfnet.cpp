// Command-line front end: generate / classify / attack / plot.
//
// Every option can also come from the environment with the SFNET_ prefix
// (e.g. SFNET_SEED, SFNET_JOBS).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfnet/harness.hpp"

namespace {

void print_fractions(const sfnet::GenerateReport& report) {
  for (const auto& [n, fractions] : report.fractions) {
    std::printf("n=%d:", n);
    for (sfnet::Category c : sfnet::kAllCategories) {
      const auto it = fractions.find(sfnet::to_string(c));
      std::printf("  %s %.1f%%", sfnet::to_string(c), 100.0 * (it == fractions.end() ? 0.0 : it->second));
    }
    std::printf("\n");
  }
}

void print_summary(const std::vector<sfnet::SummaryRow>& rows) {
  std::printf("%-6s %-6s %-16s %6s %8s %10s %10s %10s %10s\n", "size", "strat", "group", "count",
              "aborted", "mean_dM", "mean_dL", "mean_dC", "mean_dD");
  const auto cell = [](const std::optional<double>& v) {
    char buf[32];
    if (v)
      std::snprintf(buf, sizeof(buf), "%9.4f", *v);
    else
      std::snprintf(buf, sizeof(buf), "%9s", "--");
    return std::string(buf);
  };
  for (const auto& r : rows) {
    std::printf("%-6d %-6s %-16s %6zu %8zu %s %s %s %s\n", r.size_n, sfnet::to_string(r.strategy),
                r.group ? sfnet::to_string(*r.group) : "overall", r.count, r.aborted,
                cell(r.mean_delta_m).c_str(), cell(r.mean_delta_l).c_str(),
                cell(r.mean_delta_c).c_str(), cell(r.mean_delta_d).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scale-free attribute classification and adversarial link-rewiring experiments"};
  app.require_subcommand(1);

  // ---- generate -----------------------------------------------------------
  sfnet::GenerateConfig gen;
  auto* generate = app.add_subcommand("generate", "generate and classify BA networks");
  generate->add_option("--sizes", gen.sizes, "network sizes n")->envname("SFNET_SIZES");
  generate->add_option("--count", gen.count, "networks per size")->envname("SFNET_COUNT");
  generate->add_option("--m-attach", gen.m_attach, "BA attachment parameter");
  generate->add_option("--bootstrap", gen.fit.bootstrap_reps, "bootstrap replicates")
      ->envname("SFNET_BOOTSTRAP");
  generate->add_option("--seed", gen.seed, "base seed")->envname("SFNET_SEED");
  generate->add_option("--out", gen.out_dir, "output directory")->required()->envname("SFNET_OUT");
  generate->add_option("--jobs", gen.jobs, "worker threads")->envname("SFNET_JOBS");

  // ---- classify -----------------------------------------------------------
  std::string classify_path;
  bool directed = false;
  bool no_total = false;
  sfnet::FitConfig classify_fit;
  auto* classify_cmd = app.add_subcommand("classify", "classify an edge-list file");
  classify_cmd->add_option("file", classify_path, "edge-list file")->required();
  classify_cmd->add_flag("--directed", directed, "treat lines as directed arcs");
  classify_cmd->add_flag("--no-total-degree", no_total,
                         "directed inputs: skip the undirected total-degree sequence");
  classify_cmd->add_option("--bootstrap", classify_fit.bootstrap_reps, "bootstrap replicates")
      ->envname("SFNET_BOOTSTRAP");
  classify_cmd->add_option("--seed", classify_fit.seed, "rng seed")->envname("SFNET_SEED");

  // ---- attack -------------------------------------------------------------
  sfnet::AttackPlanConfig atk;
  std::vector<std::string> strategy_names;
  auto* attack = app.add_subcommand("attack", "rewire strong networks until they leave the strong category");
  attack->add_option("--dataset", atk.dataset_dir, "dataset directory (from generate)")->required();
  attack->add_option("--out", atk.out_dir, "results directory")->required()->envname("SFNET_OUT");
  attack->add_option("--strategies", strategy_names, "subset of rlr,dalr,dilr");
  attack->add_option("--reps", atk.repetitions, "repetitions per (network, strategy)")
      ->envname("SFNET_REPS");
  attack->add_option("--networks", atk.networks_per_size, "strong networks per size (0 = all)");
  attack->add_option("--gamma", atk.dilr.gamma, "DILR large-degree fraction");
  attack->add_option("--beta", atk.dilr.beta, "DILR medium-degree cutoff fraction");
  attack->add_option("--bootstrap", atk.fit.bootstrap_reps, "screen-level bootstrap replicates")
      ->envname("SFNET_BOOTSTRAP");
  attack->add_option("--confirm-bootstrap", atk.confirm_reps,
                     "bootstrap replicates for exit confirmation");
  attack->add_option("--seed", atk.seed, "base seed")->envname("SFNET_SEED");
  attack->add_option("--jobs", atk.jobs, "worker threads")->envname("SFNET_JOBS");
  attack->add_option("--max-steps", atk.max_steps, "step budget per run (0 = |E|)");
  attack->add_flag("--save-adversarial", atk.save_adversarial, "persist adversarial edge lists");
  attack->add_flag("--step-logs", atk.save_step_logs, "persist per-run JSONL step logs");

  // ---- plot ---------------------------------------------------------------
  std::string results_dir, plot_out;
  std::vector<std::string> extra_edges;
  auto* plot = app.add_subcommand("plot", "render violin SVGs (and degree CCDFs) from results");
  plot->add_option("--results", results_dir, "results directory (from attack)")->required();
  plot->add_option("--out", plot_out, "output directory (default: results dir)");
  plot->add_option("--edges", extra_edges, "edge-list files to render as log-log degree CCDFs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      const auto report = sfnet::cmd_generate(gen);
      print_fractions(report);
      std::printf("wrote %zu networks and %s\n", report.networks.size(),
                  report.manifest_path.c_str());
    } else if (classify_cmd->parsed()) {
      classify_fit.include_total_degree = !no_total;
      const auto result = sfnet::cmd_classify(classify_path, directed, classify_fit);
      std::cout << sfnet::to_json(result).dump(2) << "\n";
    } else if (attack->parsed()) {
      if (!strategy_names.empty()) {
        atk.strategies.clear();
        for (const auto& name : strategy_names)
          atk.strategies.push_back(sfnet::strategy_from_string(name));
      }
      const auto report = sfnet::cmd_attack(atk);
      std::printf("attacked %zu networks, %zu runs\n", report.networks_attacked,
                  report.records.size());
      print_summary(report.summary);
    } else if (plot->parsed()) {
      if (plot_out.empty()) plot_out = results_dir;
      const auto report = sfnet::cmd_plot(results_dir, plot_out, extra_edges);
      for (const auto& f : report.files) std::printf("wrote %s\n", f.c_str());
    }
  } catch (const sfnet::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
