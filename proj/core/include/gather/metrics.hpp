#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gather/geometry.hpp"
#include "gather/swarm.hpp"

namespace gather {

// Closed walk along the swarm's outer boundary. Steps are the visited robot
// cells in walk order (start robot not repeated at the end). Pinch robots
// appear once per pass; length additionally counts +-180-degree turnaround
// visits twice. A singleton swarm has length 1 by convention.
struct BoundaryTrace {
  std::vector<Coord> steps;
  std::int64_t length = 0;
  std::int64_t distinct_robots = 0;
};

struct ProgressMeasures {
  std::int64_t boundary_len = 0;
  std::int64_t convex_count = 0;
  std::int64_t convex_measure = 0;  // 4*boundary_len - convex_count
  std::int64_t area = 0;

  friend bool operator==(const ProgressMeasures&, const ProgressMeasures&) = default;
};

struct ProgressVerdict {
  bool boundary_progress = false;  // strictly decreased
  bool convex_progress = false;    // strictly decreased
  std::int64_t area_delta = 0;
  bool lemma_ok = false;
};

// All robots with at least one empty 8-neighbor (outer and inner boundary).
std::vector<Coord> boundary_robots(const Swarm& s);

// Moore-neighbor walk around the outer boundary, counter-clockwise as
// rendered (row 0 on top), starting from the lexicographically smallest
// (min y, then min x) boundary robot, stopping on re-entering the start
// with the same entry direction.
BoundaryTrace trace_outer_boundary(const Swarm& s);

// Convex (+90) corners of the outer contour of the union of unit squares.
std::int64_t count_convex_vertices(const Swarm& s);

// Distinct outer-boundary robots plus enclosed cells (occupied or empty).
std::int64_t area(const Swarm& s);

ProgressMeasures measures(const Swarm& s);

// Monotonicity verdict for one round transition.
ProgressVerdict check_round_progress(const ProgressMeasures& before,
                                     const ProgressMeasures& after);

// Exterior classification shared by area() and count_convex_vertices():
// empty cells 4-connected to the outside of the padded bounding box.
// Exposed for the harness and tests.
struct ExteriorMap {
  Coord origin;              // top-left of padded box
  std::int64_t width = 0;    // padded box extents
  std::int64_t height = 0;
  std::vector<char> exterior_empty;  // row-major over the padded box

  bool is_exterior(Coord c) const;   // cells outside the box are exterior
};
ExteriorMap classify_exterior(const Swarm& s);

}  // namespace gather
