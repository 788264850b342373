#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>

namespace gather {

// Grid cell position. x grows rightward, y grows downward (text-map order:
// row 0 is the top line). Signed 64-bit so hops can drift without bounds
// checking; swarms up to 1e6 robots stay far from overflow.
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;

  Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }
  Coord operator-(Coord o) const { return {x - o.x, y - o.y}; }
  Coord operator-() const { return {-x, -y}; }
};

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    // splitmix64-style mixer over the packed halves
    std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    return static_cast<std::size_t>(h);
  }
};

inline std::int64_t l1_distance(Coord a, Coord b) {
  return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

inline std::int64_t linf_distance(Coord a, Coord b) {
  const std::int64_t dx = std::llabs(a.x - b.x);
  const std::int64_t dy = std::llabs(a.y - b.y);
  return dx > dy ? dx : dy;
}

// Fixed enumeration order: E, W, N, S, then NE, NW, SE, SW. Traces and any
// iteration that leaks into output rely on this order being stable.
inline constexpr std::array<Coord, 4> kNeighbors4 = {
    Coord{1, 0}, Coord{-1, 0}, Coord{0, -1}, Coord{0, 1}};
inline constexpr std::array<Coord, 8> kNeighbors8 = {
    Coord{1, 0},  Coord{-1, 0}, Coord{0, -1}, Coord{0, 1},
    Coord{1, -1}, Coord{-1, -1}, Coord{1, 1}, Coord{-1, 1}};

enum class NeighborMode { four, eight };

inline std::array<Coord, 8> neighbors(Coord c, NeighborMode mode, int& count) {
  std::array<Coord, 8> out{};
  count = mode == NeighborMode::four ? 4 : 8;
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        c + kNeighbors8[static_cast<std::size_t>(i)];
  }
  return out;
}

// One of the eight symmetries of the grid (dihedral group of the square).
// Application order is fixed: rotate counter-toward-positive first, then
// mirror across the y axis (x -> -x) if `mirrored` is set.
struct Transform {
  int rotation = 0;  // quarter turns, 0..3
  bool mirrored = false;

  friend bool operator==(const Transform&, const Transform&) = default;
};

inline constexpr std::array<Transform, 8> kAllTransforms = {
    Transform{0, false}, Transform{1, false}, Transform{2, false},
    Transform{3, false}, Transform{0, true},  Transform{1, true},
    Transform{2, true},  Transform{3, true}};

inline Coord rotate_quarter(Coord o, int quarters) {
  switch (quarters & 3) {
    case 0: return o;
    case 1: return {-o.y, o.x};
    case 2: return {-o.x, -o.y};
    default: return {o.y, -o.x};
  }
}

inline Coord apply_transform(Coord offset, Transform t) {
  Coord r = rotate_quarter(offset, t.rotation);
  if (t.mirrored) r.x = -r.x;
  return r;
}

inline Transform inverse(Transform t) {
  // mirror o rot(k) inverted: rot(-k) o mirror = mirror o rot(k) again
  // since mirror conjugates rotation to its inverse.
  if (t.mirrored) return t;
  return Transform{(4 - t.rotation) & 3, false};
}

// Mirror across the main diagonal (x <-> y). Used for the Diag-B second
// inhibit area, which the hop checks mirrored at its diagonal axis D.
inline Coord mirror_diagonal(Coord o) { return {o.y, o.x}; }

}  // namespace gather
