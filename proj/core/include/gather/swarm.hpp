#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "gather/geometry.hpp"

namespace gather {

// The world state: a finite set of occupied cells. Immutable once built;
// inserting a duplicate cell is a no-op by construction, which is exactly
// the merge rule ("they merge and remove one of them").
class Swarm {
 public:
  Swarm() = default;
  explicit Swarm(std::vector<Coord> cells);

  bool contains(Coord c) const { return set_.count(c) != 0; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  // Sorted (y, then x); every deterministic iteration goes through this.
  const std::vector<Coord>& cells() const { return cells_; }

  Coord min_corner() const;  // bounding box, requires nonempty
  Coord max_corner() const;

  friend bool operator==(const Swarm& a, const Swarm& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::vector<Coord> cells_;
  std::unordered_set<Coord, CoordHash> set_;
};

// True iff the occupied set is a single 4-connected component.
// Throws invalid_input on an empty swarm.
bool is_connected(const Swarm& s);

// All robots are inside some 2x2 square; terminal condition.
bool is_gathered(const Swarm& s);

}  // namespace gather
