#include "gather/engine.hpp"

#include <algorithm>
#include <sstream>

#include "gather/error.hpp"
#include "gather/snapshot.hpp"

namespace gather {

std::int64_t gathering_round_bound(std::int64_t b) { return 6 * b * b + 5 * b; }

std::int64_t default_max_rounds(std::int64_t b) {
  return 10 * gathering_round_bound(b) + 10;
}

std::pair<Swarm, RoundResult> step(const Swarm& s, const PatternLibrary& lib,
                                   const SimConfig& cfg) {
  if (!is_connected(s)) throw invalid_input("step: swarm not 4-connected");
  if (is_gathered(s)) throw invalid_input("step: swarm already gathered");

  const MatchOptions opts{cfg.strict_conflicts};
  RoundResult result;
  std::vector<Coord> next;
  next.reserve(s.size());

  // Look and compute against the immutable round-start swarm; the iteration
  // order is the sorted cell order and cannot influence the outcome.
  for (Coord robot : s.cells()) {
    HopDecision d;
    try {
      d = find_hop(Snapshot::take(s, robot), lib, opts);
    } catch (const ambiguity_error& e) {
      std::ostringstream msg;
      msg << e.what() << " at robot (" << robot.x << "," << robot.y << ")";
      throw ambiguity_error(msg.str());
    }
    if (d.hops()) {
      const Coord to = robot + d.delta;
      result.hops.push_back({robot, to});
      next.push_back(to);
    } else {
      next.push_back(robot);
    }
  }

  Swarm moved(std::move(next));
  result.merges = static_cast<std::int64_t>(s.size() - moved.size());
  result.robots_after = static_cast<std::int64_t>(moved.size());

  if (!is_connected(moved)) {
    std::ostringstream msg;
    msg << "round broke 4-connectivity (" << result.hops.size()
        << " hops); pattern transcription bug";
    throw invariant_violation(msg.str());
  }
  return {std::move(moved), std::move(result)};
}

Trace run(const Swarm& s, const PatternLibrary& lib, const SimConfig& cfg) {
  if (!is_connected(s)) throw invalid_input("run: swarm not 4-connected");

  const bool record = cfg.record_trace || cfg.lemma_checks;
  Trace trace;
  trace.initial = s;

  const ProgressMeasures initial = measures(s);
  if (record) trace.measures_per_round.push_back(initial);

  const std::int64_t max_rounds = cfg.max_rounds > 0
                                      ? cfg.max_rounds
                                      : default_max_rounds(initial.boundary_len);

  Swarm cur = s;
  ProgressMeasures before = initial;
  for (std::int64_t round = 0; round < max_rounds; ++round) {
    if (is_gathered(cur)) {
      trace.outcome = Outcome::Gathered;
      trace.gathered_round = round;
      return trace;
    }
    Swarm next;
    RoundResult rr;
    std::tie(next, rr) = step(cur, lib, cfg);

    const bool fixed_point = next == cur;
    cur = std::move(next);

    if (record) {
      const ProgressMeasures after = measures(cur);
      trace.measures_per_round.push_back(after);
      if (!cfg.record_trace) rr.hops.clear();
      trace.rounds.push_back(std::move(rr));

      if (cfg.lemma_checks) {
        const ProgressVerdict v = check_round_progress(before, after);
        if (!v.lemma_ok) {
          std::ostringstream msg;
          msg << "lemma violation in round " << round + 1 << ": ";
          if (after.boundary_len > before.boundary_len)
            msg << "Boundary increased " << before.boundary_len << " -> "
                << after.boundary_len;
          else if (after.convex_measure > before.convex_measure)
            msg << "Convex increased " << before.convex_measure << " -> "
                << after.convex_measure;
          else
            msg << "no Boundary/Convex progress and Area delta " << v.area_delta
                << " > -8";
          throw lemma_violation(msg.str());
        }
      }
      before = after;
    }

    if (fixed_point) {
      // Deterministic system: an identical round can never gather.
      trace.outcome = Outcome::MaxRoundsExceeded;
      return trace;
    }
  }

  if (is_gathered(cur)) {
    trace.outcome = Outcome::Gathered;
    trace.gathered_round = max_rounds;
    return trace;
  }
  trace.outcome = Outcome::MaxRoundsExceeded;
  return trace;
}

}  // namespace gather
