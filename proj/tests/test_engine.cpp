#include <doctest.h>

#include <algorithm>
#include <random>

#include "gather/engine.hpp"
#include "gather/error.hpp"
#include "gather/generators.hpp"
#include "gather/snapshot.hpp"

using namespace gather;

namespace {

SimConfig quiet() {
  SimConfig cfg;
  cfg.lemma_checks = false;
  cfg.record_trace = true;
  return cfg;
}

// Reference re-implementation of one round that evaluates robots in an
// arbitrary caller-supplied order.
Swarm step_in_order(const Swarm& s, const std::vector<Coord>& order,
                    const PatternLibrary& lib) {
  std::vector<Coord> next;
  for (Coord robot : order) {
    HopDecision d = find_hop(Snapshot::take(s, robot), lib, {true});
    next.push_back(d.hops() ? robot + d.delta : robot);
  }
  return Swarm(std::move(next));
}

}  // namespace

TEST_CASE("step preconditions") {
  const auto& lib = default_patterns();
  CHECK_THROWS_AS(step(filled_rect(2, 2), lib, quiet()), invalid_input);
  CHECK_THROWS_AS(step(Swarm({{0, 0}, {2, 0}}), lib, quiet()), invalid_input);
}

TEST_CASE("already gathered runs take zero rounds") {
  Trace t = run(filled_rect(2, 2), default_patterns(), quiet());
  CHECK(t.outcome == Outcome::Gathered);
  CHECK(t.gathered_round == 0);
  CHECK(t.rounds_executed() == 0);
}

TEST_CASE("robot count never increases and merges account for it") {
  Swarm s = square_ring(6);
  const auto& lib = default_patterns();
  SimConfig cfg = quiet();
  std::int64_t robots = static_cast<std::int64_t>(s.size());
  for (int i = 0; i < 50 && !is_gathered(s); ++i) {
    auto [next, rr] = step(s, lib, cfg);
    CHECK(rr.robots_after == static_cast<std::int64_t>(next.size()));
    CHECK(rr.robots_after <= robots);
    CHECK(rr.merges == robots - rr.robots_after);
    robots = rr.robots_after;
    s = next;
  }
}

TEST_CASE("hop deltas are king moves or axis doubles") {
  Swarm s = random_connected(80, 9);
  const auto& lib = default_patterns();
  SimConfig cfg = quiet();
  for (int i = 0; i < 100 && !is_gathered(s); ++i) {
    auto [next, rr] = step(s, lib, cfg);
    for (const auto& [from, to] : rr.hops) {
      const Coord d = to - from;
      const bool king = linf_distance({0, 0}, d) == 1;
      const bool axis2 = (d.x == 0 && std::llabs(d.y) == 2) ||
                         (d.y == 0 && std::llabs(d.x) == 2);
      CHECK((king || axis2));
    }
    s = next;
  }
}

TEST_CASE("synchrony: evaluation order cannot change the round result") {
  const auto& lib = default_patterns();
  std::mt19937_64 rng(123);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Swarm s = random_connected(60, seed);
    for (int round = 0; round < 5 && !is_gathered(s); ++round) {
      auto [next, rr] = step(s, lib, quiet());
      std::vector<Coord> order = s.cells();
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(step_in_order(s, order, lib) == next);
      s = next;
    }
  }
}

TEST_CASE("determinism: identical runs produce identical traces") {
  Swarm s = random_connected(70, 5);
  SimConfig cfg;
  cfg.lemma_checks = true;
  Trace a = run(s, default_patterns(), cfg);
  Trace b = run(s, default_patterns(), cfg);
  REQUIRE(a.outcome == b.outcome);
  REQUIRE(a.rounds.size() == b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    CHECK(a.rounds[i].hops == b.rounds[i].hops);
    CHECK(a.rounds[i].merges == b.rounds[i].merges);
  }
  CHECK(a.measures_per_round.size() == b.measures_per_round.size());
}

TEST_CASE("trace measures cover round zero through the last round") {
  Swarm s = square_ring(5);
  SimConfig cfg;
  cfg.lemma_checks = true;
  Trace t = run(s, default_patterns(), cfg);
  CHECK(t.outcome == Outcome::Gathered);
  CHECK(t.measures_per_round.size() == t.rounds.size() + 1);
}

TEST_CASE("square ring gathers within the quadratic round bound") {
  for (std::int64_t side : {3, 4, 5, 6, 10}) {
    Swarm s = square_ring(side);
    const std::int64_t b0 = measures(s).boundary_len;
    SimConfig cfg;
    cfg.lemma_checks = true;
    Trace t = run(s, default_patterns(), cfg);
    REQUIRE(t.outcome == Outcome::Gathered);
    CHECK(t.gathered_round <= gathering_round_bound(b0));
  }
}

TEST_CASE("connectivity holds after every round") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    Swarm s = random_connected(50, seed);
    const auto& lib = default_patterns();
    for (int i = 0; i < 200 && !is_gathered(s); ++i) {
      auto [next, rr] = step(s, lib, quiet());  // step() asserts internally
      CHECK(is_connected(next));
      s = next;
    }
  }
}
