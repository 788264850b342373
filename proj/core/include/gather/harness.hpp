#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gather/engine.hpp"
#include "gather/generators.hpp"
#include "gather/patterns.hpp"
#include "gather/swarm.hpp"

namespace gather {

struct GeneratorSpec {
  std::string kind;  // square_ring | filled_rect | line | cross | hourglass | random_connected
  std::int64_t side = 0;         // square_ring
  std::int64_t width = 0;        // filled_rect
  std::int64_t height = 0;       // filled_rect
  std::int64_t length = 0;       // line
  std::string orientation;       // line: horizontal | vertical
  std::int64_t arm = 0;          // cross
  std::int64_t block = 0;        // hourglass
  std::int64_t n = 0;            // random_connected
  std::uint64_t seed = 0;        // random_connected

  Swarm build() const;  // throws invalid_input on bad kind/params
};

struct RunSpec {
  std::string name;
  std::variant<GeneratorSpec, std::string> input;  // generator or file path
};

struct ExperimentConfig {
  std::vector<RunSpec> runs;
  SimConfig sim;
  std::string output_dir = "out";
  bool render = false;

  // Parse the JSON config document (see README for the schema).
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);
};

struct RunSummary {
  std::string name;
  std::int64_t n = 0;
  std::int64_t initial_boundary = 0;
  std::int64_t rounds = -1;  // -1: did not gather
  std::int64_t bound = 0;    // 6B^2 + 5B
  double rounds_per_b2 = 0.0;
  std::int64_t lemma_violations = 0;
  std::int64_t merges_total = 0;
  std::int64_t cumulative_area_increase = 0;
  std::string outcome;  // gathered | max_rounds | error:<message>
};

struct ExperimentSummary {
  std::vector<RunSummary> rows;
  bool all_ok = false;  // every run gathered within bound, zero violations
};

// Execute every run with lemma checks, write one JSONL trace per run plus a
// CSV summary into cfg.output_dir. Returns the summary; all_ok mirrors the
// CLI exit status.
ExperimentSummary run_experiments(const ExperimentConfig& cfg,
                                  const PatternLibrary& lib);

// Text-map rendering of the bounding box ('#'/'.'), stable row order.
std::string render_frame(const Swarm& s);

std::string summary_to_csv(const ExperimentSummary& summary);

// One trace line per round: round index, hops, merges and the measures.
std::string trace_to_jsonl(const Trace& trace);

}  // namespace gather
