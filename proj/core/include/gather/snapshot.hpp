#pragma once

#include <array>
#include <vector>

#include "gather/geometry.hpp"
#include "gather/swarm.hpp"

namespace gather {

// What one robot sees: occupied offsets within L1 distance kViewRadius of
// itself, itself at (0,0). This is the entire input to a hop decision.
class Snapshot {
 public:
  static constexpr int kViewRadius = 7;

  Snapshot();  // only (0,0) occupied

  // center must be occupied in s; throws invalid_input otherwise.
  static Snapshot take(const Swarm& s, Coord center);

  // Build directly from relative offsets (test/fixture entry point).
  // (0,0) is added if missing. Offsets outside the view radius are rejected.
  static Snapshot from_offsets(const std::vector<Coord>& offsets);

  bool occupied(Coord offset) const {
    if (std::llabs(offset.x) > kViewRadius || std::llabs(offset.y) > kViewRadius)
      return false;
    if (std::llabs(offset.x) + std::llabs(offset.y) > kViewRadius) return false;
    return grid_[index(offset)];
  }

  const std::vector<Coord>& offsets() const { return offsets_; }  // sorted

  // The same view under a grid symmetry.
  Snapshot transformed(Transform t) const;

  friend bool operator==(const Snapshot& a, const Snapshot& b) {
    return a.offsets_ == b.offsets_;
  }

 private:
  static constexpr int kSide = 2 * kViewRadius + 1;

  static std::size_t index(Coord offset) {
    return static_cast<std::size_t>((offset.y + kViewRadius) * kSide +
                                    (offset.x + kViewRadius));
  }

  void insert(Coord offset);

  std::array<bool, kSide * kSide> grid_{};
  std::vector<Coord> offsets_;
};

}  // namespace gather
