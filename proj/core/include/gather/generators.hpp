#pragma once

#include <cstdint>
#include <string>

#include "gather/swarm.hpp"

namespace gather {

enum class Orientation { horizontal, vertical };

// Hollow axis-parallel square ring with the given side length (>= 3);
// 4*(side-1) robots.
Swarm square_ring(std::int64_t side);

Swarm filled_rect(std::int64_t width, std::int64_t height);

Swarm line(std::int64_t length, Orientation o);

// Plus shape: center cell plus four straight arms of the given length.
Swarm cross(std::int64_t arm);

// Two filled blocks sharing exactly one corner cell (the pinch robot).
Swarm hourglass(std::int64_t block);

// n cells grown by seeded random attachment of empty 4-neighbors to a
// uniformly random frontier cell. Deterministic in (n, seed).
Swarm random_connected(std::int64_t n, std::uint64_t seed);

// Deterministic 64-bit generator used by random_connected; exposed so the
// harness and tests can derive reproducible seed streams.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Unbiased in [0, bound) for bound > 0.
  std::uint64_t below(std::uint64_t bound);
};

}  // namespace gather
