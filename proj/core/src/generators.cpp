#include "gather/generators.hpp"

#include <algorithm>

#include "gather/error.hpp"

namespace gather {

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the stream platform-independent and unbiased.
  const std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
  std::uint64_t v = next();
  while (v > limit) v = next();
  return v % bound;
}

Swarm square_ring(std::int64_t side) {
  if (side < 3) throw invalid_input("square_ring: side must be >= 3");
  std::vector<Coord> cells;
  for (std::int64_t i = 0; i < side; ++i) {
    cells.push_back({i, 0});
    cells.push_back({i, side - 1});
    cells.push_back({0, i});
    cells.push_back({side - 1, i});
  }
  return Swarm(std::move(cells));
}

Swarm filled_rect(std::int64_t width, std::int64_t height) {
  if (width < 1 || height < 1)
    throw invalid_input("filled_rect: dimensions must be positive");
  std::vector<Coord> cells;
  cells.reserve(static_cast<std::size_t>(width * height));
  for (std::int64_t y = 0; y < height; ++y)
    for (std::int64_t x = 0; x < width; ++x) cells.push_back({x, y});
  return Swarm(std::move(cells));
}

Swarm line(std::int64_t length, Orientation o) {
  if (length < 1) throw invalid_input("line: length must be positive");
  std::vector<Coord> cells;
  for (std::int64_t i = 0; i < length; ++i)
    cells.push_back(o == Orientation::horizontal ? Coord{i, 0} : Coord{0, i});
  return Swarm(std::move(cells));
}

Swarm cross(std::int64_t arm) {
  if (arm < 1) throw invalid_input("cross: arm must be positive");
  std::vector<Coord> cells{{0, 0}};
  for (std::int64_t i = 1; i <= arm; ++i) {
    cells.push_back({i, 0});
    cells.push_back({-i, 0});
    cells.push_back({0, i});
    cells.push_back({0, -i});
  }
  return Swarm(std::move(cells));
}

Swarm hourglass(std::int64_t block) {
  if (block < 2) throw invalid_input("hourglass: block must be >= 2");
  std::vector<Coord> cells;
  for (std::int64_t y = 0; y < block; ++y)
    for (std::int64_t x = 0; x < block; ++x) cells.push_back({x, y});
  const std::int64_t off = block - 1;  // blocks share one pinch cell
  for (std::int64_t y = 0; y < block; ++y)
    for (std::int64_t x = 0; x < block; ++x)
      cells.push_back({x + off, y + off});
  return Swarm(std::move(cells));
}

Swarm random_connected(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw invalid_input("random_connected: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Coord> cells{{0, 0}};
  std::unordered_set<Coord, CoordHash> occupied{{0, 0}};

  // Frontier-uniform growth: pick an occupied cell, attach a random empty
  // 4-neighbor; cells with no free side get dropped from the frontier.
  std::vector<Coord> frontier{{0, 0}};
  while (static_cast<std::int64_t>(cells.size()) < n) {
    const std::size_t pick =
        static_cast<std::size_t>(rng.below(frontier.size()));
    const Coord base = frontier[pick];
    std::array<Coord, 4> free{};
    int free_count = 0;
    for (Coord d : kNeighbors4) {
      const Coord nb = base + d;
      if (!occupied.count(nb)) free[static_cast<std::size_t>(free_count++)] = nb;
    }
    if (free_count == 0) {
      frontier[pick] = frontier.back();
      frontier.pop_back();
      continue;
    }
    const Coord chosen =
        free[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(free_count)))];
    occupied.insert(chosen);
    cells.push_back(chosen);
    frontier.push_back(chosen);
  }
  return Swarm(std::move(cells));
}

}  // namespace gather
