#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gather/metrics.hpp"
#include "gather/patterns.hpp"
#include "gather/swarm.hpp"

namespace gather {

struct RoundResult {
  std::vector<std::pair<Coord, Coord>> hops;  // (from, to), sorted by from
  std::int64_t merges = 0;
  std::int64_t robots_after = 0;
};

struct SimConfig {
  std::int64_t max_rounds = 0;  // 0: use 10 * (6B^2 + 5B) from the start swarm
  bool strict_conflicts = true;
  bool lemma_checks = true;
  bool record_trace = true;
};

enum class Outcome { Gathered, MaxRoundsExceeded, Error };

struct Trace {
  Swarm initial;
  std::vector<RoundResult> rounds;
  std::vector<ProgressMeasures> measures_per_round;  // index 0 = round 0
  Outcome outcome = Outcome::Error;
  std::int64_t gathered_round = -1;
  std::string error_message;  // set when outcome == Error

  std::int64_t rounds_executed() const {
    return static_cast<std::int64_t>(rounds.size());
  }
};

// One fully synchronous round: every robot decides on the round-start swarm,
// all hops apply simultaneously, set insertion merges. Preconditions: s is
// connected and not gathered. Post-round 4-connectivity is asserted and an
// invariant_violation is thrown if it fails (pattern transcription bug).
std::pair<Swarm, RoundResult> step(const Swarm& s, const PatternLibrary& lib,
                                   const SimConfig& cfg);

// Iterate step() until gathered or the round budget runs out, recording
// measures per round. With lemma_checks on, a monotonicity violation aborts
// the run with outcome Error naming round and measure. A fixed-point round
// (identical swarm) ends the run early as MaxRoundsExceeded: the system is
// deterministic, so it can never gather from there.
Trace run(const Swarm& s, const PatternLibrary& lib, const SimConfig& cfg);

// Round budget used when SimConfig::max_rounds == 0.
std::int64_t default_max_rounds(std::int64_t initial_boundary_len);

// Round bound 6B^2 + 5B used by harness reports and the acceptance suite.
std::int64_t gathering_round_bound(std::int64_t initial_boundary_len);

}  // namespace gather
