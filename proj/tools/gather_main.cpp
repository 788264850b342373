#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gather/engine.hpp"
#include "gather/error.hpp"
#include "gather/harness.hpp"
#include "gather/io.hpp"
#include "gather/metrics.hpp"
#include "gather/patterns.hpp"

namespace {

// Pattern source precedence: --patterns flag, then GATHER_PATTERNS from the
// environment, then the library embedded at build time.
gather::PatternLibrary resolve_patterns(const std::string& flag_path) {
  if (!flag_path.empty()) return gather::load_patterns_from_file(flag_path);
  if (const char* env = std::getenv("GATHER_PATTERNS"); env && *env)
    return gather::load_patterns_from_file(env);
  return gather::default_patterns();
}

int cmd_run(const std::string& config_path, const std::string& patterns_path) {
  const auto lib = resolve_patterns(patterns_path);
  const auto cfg = gather::ExperimentConfig::from_file(config_path);
  const auto summary = gather::run_experiments(cfg, lib);
  std::cout << gather::summary_to_csv(summary);
  return summary.all_ok ? 0 : 1;
}

int cmd_simulate(const std::string& input, const std::string& patterns_path,
                 bool render, std::int64_t max_rounds, bool strict) {
  const auto lib = resolve_patterns(patterns_path);
  gather::Swarm s = gather::load_swarm_file(input);
  gather::SimConfig cfg;
  cfg.max_rounds = max_rounds;
  cfg.strict_conflicts = strict;
  cfg.lemma_checks = true;
  cfg.record_trace = true;

  if (render) std::cout << gather::render_frame(s) << "\n";
  gather::Trace trace = gather::run(s, lib, cfg);

  gather::Swarm cur = s;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const auto& rr = trace.rounds[i];
    const auto& m = trace.measures_per_round[i + 1];
    std::cout << "round " << i + 1 << ": hops=" << rr.hops.size()
              << " merges=" << rr.merges << " robots=" << rr.robots_after
              << " boundary=" << m.boundary_len << " convex=" << m.convex_count
              << " convex_measure=" << m.convex_measure << " area=" << m.area
              << "\n";
    if (render) {
      std::vector<gather::Coord> cells = cur.cells();
      for (const auto& [from, to] : rr.hops) {
        cells.erase(std::find(cells.begin(), cells.end(), from));
        cells.push_back(to);
      }
      cur = gather::Swarm(std::move(cells));
      std::cout << gather::render_frame(cur) << "\n";
    }
  }

  switch (trace.outcome) {
    case gather::Outcome::Gathered:
      std::cout << "gathered after " << trace.gathered_round << " rounds\n";
      return 0;
    case gather::Outcome::MaxRoundsExceeded:
      std::cout << "did not gather within the round budget\n";
      return 1;
    case gather::Outcome::Error:
      std::cout << "error: " << trace.error_message << "\n";
      return 1;
  }
  return 1;
}

int cmd_measure(const std::string& input) {
  gather::Swarm s = gather::load_swarm_file(input);
  const auto m = gather::measures(s);
  std::cout << "boundary_len " << m.boundary_len << "\n"
            << "convex_count " << m.convex_count << "\n"
            << "convex_measure " << m.convex_measure << "\n"
            << "area " << m.area << "\n";
  return 0;
}

int cmd_validate(const std::string& patterns_path) {
  const auto lib = resolve_patterns(patterns_path);
  std::cout << "ok: " << lib.specs.size() << " patterns (version "
            << lib.version << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oblivious-robot gathering simulator and verification harness"};
  app.require_subcommand(1);

  std::string config_path, input, patterns_path;
  bool render = false;
  bool strict = false;
  std::int64_t max_rounds = 0;

  auto* run = app.add_subcommand("run", "Run a batch experiment config");
  run->add_option("--config", config_path, "JSON experiment config")->required();
  run->add_option("--patterns", patterns_path, "Pattern file override");

  auto* sim = app.add_subcommand("simulate", "Simulate one swarm to gathering");
  sim->add_option("--input", input, "Swarm file (.map text or .json)")->required();
  sim->add_flag("--render", render, "Print ASCII frames per round");
  sim->add_option("--max-rounds", max_rounds, "Round budget (default 10x bound)");
  sim->add_flag("--strict", strict, "Strict conflict mode (error on ambiguity)");
  sim->add_option("--patterns", patterns_path, "Pattern file override");

  auto* meas = app.add_subcommand("measure", "Print progress measures of a swarm");
  meas->add_option("--input", input, "Swarm file (.map text or .json)")->required();

  auto* val = app.add_subcommand("validate-patterns", "Validate a pattern file");
  val->add_option("--patterns", patterns_path, "Pattern file (default: built-in)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, patterns_path);
    if (sim->parsed()) return cmd_simulate(input, patterns_path, render, max_rounds, strict);
    if (meas->parsed()) return cmd_measure(input);
    if (val->parsed()) return cmd_validate(patterns_path);
  } catch (const gather::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
