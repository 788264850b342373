#include "gather/swarm.hpp"

#include <algorithm>

#include "gather/error.hpp"
#include "gather/snapshot.hpp"

namespace gather {

Swarm::Swarm(std::vector<Coord> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  set_.reserve(cells_.size() * 2);
  set_.insert(cells_.begin(), cells_.end());
}

Coord Swarm::min_corner() const {
  if (cells_.empty()) throw invalid_input("min_corner: empty swarm");
  Coord m = cells_.front();
  for (Coord c : cells_) {
    m.x = std::min(m.x, c.x);
    m.y = std::min(m.y, c.y);
  }
  return m;
}

Coord Swarm::max_corner() const {
  if (cells_.empty()) throw invalid_input("max_corner: empty swarm");
  Coord m = cells_.front();
  for (Coord c : cells_) {
    m.x = std::max(m.x, c.x);
    m.y = std::max(m.y, c.y);
  }
  return m;
}

bool is_connected(const Swarm& s) {
  if (s.empty()) throw invalid_input("is_connected: empty swarm");
  std::vector<Coord> stack{s.cells().front()};
  std::unordered_set<Coord, CoordHash> seen{s.cells().front()};
  while (!stack.empty()) {
    Coord c = stack.back();
    stack.pop_back();
    for (Coord d : kNeighbors4) {
      Coord nb = c + d;
      if (s.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return seen.size() == s.size();
}

bool is_gathered(const Swarm& s) {
  if (s.empty()) throw invalid_input("is_gathered: empty swarm");
  const Coord lo = s.min_corner();
  const Coord hi = s.max_corner();
  return (hi.x - lo.x) <= 1 && (hi.y - lo.y) <= 1;
}

Snapshot::Snapshot() { insert({0, 0}); }

Snapshot Snapshot::take(const Swarm& s, Coord center) {
  if (!s.contains(center)) throw invalid_input("snapshot: center unoccupied");
  Snapshot snap;
  for (int dy = -kViewRadius; dy <= kViewRadius; ++dy) {
    const int span = kViewRadius - std::abs(dy);
    for (int dx = -span; dx <= span; ++dx) {
      const Coord off{dx, dy};
      if (off == Coord{0, 0}) continue;
      if (s.contains(center + off)) snap.insert(off);
    }
  }
  std::sort(snap.offsets_.begin(), snap.offsets_.end());
  return snap;
}

Snapshot Snapshot::from_offsets(const std::vector<Coord>& offsets) {
  Snapshot snap;
  for (Coord off : offsets) {
    if (std::llabs(off.x) + std::llabs(off.y) > kViewRadius)
      throw invalid_input("snapshot offset outside view radius");
    if (off == Coord{0, 0}) continue;
    snap.insert(off);
  }
  std::sort(snap.offsets_.begin(), snap.offsets_.end());
  return snap;
}

Snapshot Snapshot::transformed(Transform t) const {
  Snapshot out;
  for (Coord off : offsets_) {
    if (off == Coord{0, 0}) continue;
    out.insert(apply_transform(off, t));
  }
  std::sort(out.offsets_.begin(), out.offsets_.end());
  return out;
}

void Snapshot::insert(Coord offset) {
  if (!grid_[index(offset)]) {
    grid_[index(offset)] = true;
    offsets_.push_back(offset);
  }
}

}  // namespace gather
