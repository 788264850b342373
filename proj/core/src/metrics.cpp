#include "gather/metrics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gather/error.hpp"

namespace gather {

std::vector<Coord> boundary_robots(const Swarm& s) {
  if (s.empty()) throw invalid_input("boundary_robots: empty swarm");
  std::vector<Coord> out;
  for (Coord c : s.cells()) {
    for (Coord d : kNeighbors8) {
      if (!s.contains(c + d)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

bool ExteriorMap::is_exterior(Coord c) const {
  const std::int64_t ix = c.x - origin.x;
  const std::int64_t iy = c.y - origin.y;
  if (ix < 0 || iy < 0 || ix >= width || iy >= height) return true;
  return exterior_empty[static_cast<std::size_t>(iy * width + ix)] != 0;
}

ExteriorMap classify_exterior(const Swarm& s) {
  if (s.empty()) throw invalid_input("classify_exterior: empty swarm");
  const Coord lo = s.min_corner();
  const Coord hi = s.max_corner();
  ExteriorMap m;
  m.origin = {lo.x - 1, lo.y - 1};
  m.width = hi.x - lo.x + 3;
  m.height = hi.y - lo.y + 3;
  m.exterior_empty.assign(static_cast<std::size_t>(m.width * m.height), 0);

  auto idx = [&](Coord c) {
    return static_cast<std::size_t>((c.y - m.origin.y) * m.width +
                                    (c.x - m.origin.x));
  };
  auto in_box = [&](Coord c) {
    return c.x >= m.origin.x && c.y >= m.origin.y &&
           c.x < m.origin.x + m.width && c.y < m.origin.y + m.height;
  };

  // Flood the padded border; empty cells 4-connected to it are exterior.
  std::vector<Coord> stack;
  auto push = [&](Coord c) {
    if (!in_box(c) || s.contains(c)) return;
    auto& mark = m.exterior_empty[idx(c)];
    if (mark) return;
    mark = 1;
    stack.push_back(c);
  };
  for (std::int64_t x = 0; x < m.width; ++x) {
    push({m.origin.x + x, m.origin.y});
    push({m.origin.x + x, m.origin.y + m.height - 1});
  }
  for (std::int64_t y = 0; y < m.height; ++y) {
    push({m.origin.x, m.origin.y + y});
    push({m.origin.x + m.width - 1, m.origin.y + y});
  }
  while (!stack.empty()) {
    const Coord c = stack.back();
    stack.pop_back();
    for (Coord d : kNeighbors4) push(c + d);
  }
  return m;
}

namespace {

// Cell flanking the next contour edge from lattice point `at` along heading
// h, on the given side. Headings are E(1,0), S(0,1), W(-1,0), N(0,-1).
Coord flank_cell(Coord at, Coord h, bool leftside) {
  const Coord side = leftside ? Coord{h.y, -h.x} : Coord{-h.y, h.x};
  return {at.x + (h.x + side.x - 1) / 2, at.y + (h.y + side.y - 1) / 2};
}

}  // namespace

// The walk follows the outer contour of the union of unit squares with the
// swarm on the walker's left, emitting the robot that owns each traversed
// edge. A concave turn additionally emits the robot touching the turn point
// diagonally. Pinch robots therefore appear once per pass: the cross center
// four times, hourglass necks twice, and robots along a width-1 slit twice
// (the walk passes both sides around the +-180 turn). Length is the number
// of steps of the closed visit cycle; a singleton has length 1 by
// convention, and a 1 x k line has length 2k - 2.
BoundaryTrace trace_outer_boundary(const Swarm& s) {
  if (s.empty()) throw invalid_input("trace_outer_boundary: empty swarm");
  BoundaryTrace trace;

  const Coord start = s.cells().front();  // min (y, x); its W and N are empty
  bool any_neighbor = false;
  for (Coord d : kNeighbors8)
    if (s.contains(start + d)) any_neighbor = true;
  if (!any_neighbor) {
    trace.steps = {start};
    trace.length = 1;
    trace.distinct_robots = 1;
    return trace;
  }

  const ExteriorMap ext = classify_exterior(s);

  // Walk the contour starting at the start robot's top-left corner heading
  // down its left side (the exterior lies above and to its left).
  Coord v = start;        // lattice point = top-left corner of cell `start`
  Coord heading{0, 1};
  const Coord v0 = v;
  const Coord h0 = heading;

  std::vector<Coord> seq;
  std::int64_t guard = 0;
  do {
    if (++guard > 4'000'000)
      throw invariant_violation("contour walk did not close");
    seq.push_back(flank_cell(v, heading, true));  // robot owning this edge
    v = v + heading;
    const Coord al = flank_cell(v, heading, true);
    const Coord ar = flank_cell(v, heading, false);
    const bool al_occ = s.contains(al);
    const bool ar_occ = s.contains(ar);
    if (al_occ && !ar_occ) {
      // straight
    } else if (!al_occ && ext.is_exterior(al)) {
      heading = {heading.y, -heading.x};  // convex corner, turn left
    } else {
      if (al_occ) seq.push_back(al);      // pinch point-contact visit
      heading = {-heading.y, heading.x};  // concave corner, turn right
    }
  } while (!(v == v0 && heading == h0));

  // Collapse each maximal contact arc to one visit (cyclically).
  std::vector<Coord> visits;
  for (Coord c : seq)
    if (visits.empty() || !(visits.back() == c)) visits.push_back(c);
  while (visits.size() > 1 && visits.front() == visits.back())
    visits.pop_back();

  // Rotate so the walk starts at the designated start robot.
  auto at = std::find(visits.begin(), visits.end(), start);
  if (at != visits.end()) std::rotate(visits.begin(), at, visits.end());

  trace.steps = visits;
  trace.length = static_cast<std::int64_t>(visits.size());
  std::vector<Coord> uniq = visits;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  trace.distinct_robots = static_cast<std::int64_t>(uniq.size());
  return trace;
}

std::int64_t count_convex_vertices(const Swarm& s) {
  if (s.empty()) throw invalid_input("count_convex_vertices: empty swarm");
  const ExteriorMap ext = classify_exterior(s);
  const Coord lo = s.min_corner();
  const Coord hi = s.max_corner();

  // A +90 corner of the outer contour sits at a lattice vertex where one
  // occupied cell meets two exterior-empty edge-neighbors. Diagonal pinch
  // vertices contribute one such corner per occupied square (two visits).
  std::int64_t count = 0;
  for (std::int64_t vy = lo.y; vy <= hi.y + 1; ++vy) {
    for (std::int64_t vx = lo.x; vx <= hi.x + 1; ++vx) {
      const Coord nw{vx - 1, vy - 1}, ne{vx, vy - 1}, sw{vx - 1, vy}, se{vx, vy};
      auto convex_corner = [&](Coord c, Coord adj1, Coord adj2) {
        return s.contains(c) && !s.contains(adj1) && !s.contains(adj2) &&
               ext.is_exterior(adj1) && ext.is_exterior(adj2);
      };
      if (convex_corner(nw, ne, sw)) ++count;
      if (convex_corner(ne, nw, se)) ++count;
      if (convex_corner(sw, nw, se)) ++count;
      if (convex_corner(se, ne, sw)) ++count;
    }
  }
  return count;
}

std::int64_t area(const Swarm& s) {
  if (s.empty()) throw invalid_input("area: empty swarm");
  const ExteriorMap ext = classify_exterior(s);

  std::int64_t outer = 0;
  for (Coord c : s.cells()) {
    for (Coord d : kNeighbors8) {
      const Coord nb = c + d;
      if (!s.contains(nb) && ext.is_exterior(nb)) {
        ++outer;
        break;
      }
    }
  }

  std::int64_t inside = 0;
  const Coord lo = s.min_corner();
  const Coord hi = s.max_corner();
  for (std::int64_t y = lo.y; y <= hi.y; ++y) {
    for (std::int64_t x = lo.x; x <= hi.x; ++x) {
      const Coord c{x, y};
      if (s.contains(c)) {
        bool outer_robot = false;
        for (Coord d : kNeighbors8) {
          const Coord nb = c + d;
          if (!s.contains(nb) && ext.is_exterior(nb)) {
            outer_robot = true;
            break;
          }
        }
        if (!outer_robot) ++inside;
      } else if (!ext.is_exterior(c)) {
        ++inside;
      }
    }
  }
  return outer + inside;
}

ProgressMeasures measures(const Swarm& s) {
  ProgressMeasures m;
  m.boundary_len = trace_outer_boundary(s).length;
  m.convex_count = count_convex_vertices(s);
  m.convex_measure = 4 * m.boundary_len - m.convex_count;
  m.area = area(s);
  return m;
}

ProgressVerdict check_round_progress(const ProgressMeasures& before,
                                     const ProgressMeasures& after) {
  ProgressVerdict v;
  v.boundary_progress = after.boundary_len < before.boundary_len;
  v.convex_progress = after.convex_measure < before.convex_measure;
  v.area_delta = after.area - before.area;
  v.lemma_ok = after.boundary_len <= before.boundary_len &&
               after.convex_measure <= before.convex_measure &&
               (v.boundary_progress || v.convex_progress || v.area_delta <= -8);
  return v;
}

}  // namespace gather
