#include "gather/patterns.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gather/default_patterns.hpp"
#include "gather/error.hpp"

namespace gather {

const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::DiagA: return "DiagA";
    case PatternKind::DiagB: return "DiagB";
    case PatternKind::Inhibit1: return "Inhibit1";
    case PatternKind::Inhibit2: return "Inhibit2";
    case PatternKind::Inhibit3: return "Inhibit3";
    case PatternKind::HV1: return "HV1";
    case PatternKind::HV2: return "HV2";
  }
  return "?";
}

bool is_inhibit(PatternKind k) {
  return k == PatternKind::Inhibit1 || k == PatternKind::Inhibit2 ||
         k == PatternKind::Inhibit3;
}

bool is_diag(PatternKind k) {
  return k == PatternKind::DiagA || k == PatternKind::DiagB;
}

bool is_hv(PatternKind k) {
  return k == PatternKind::HV1 || k == PatternKind::HV2;
}

bool PatternSpec::requires_robot(Coord off) const {
  for (const auto& [o, c] : cells)
    if (o == off) return c == PatternCell::RequireRobot;
  return false;
}

bool PatternSpec::requires_empty(Coord off) const {
  for (const auto& [o, c] : cells)
    if (o == off) return c == PatternCell::RequireEmpty;
  return false;
}

static void sort_cells(std::vector<std::pair<Coord, PatternCell>>& cells) {
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

PatternSpec PatternSpec::transformed(Transform t) const {
  PatternSpec out = *this;
  for (auto& [off, cell] : out.cells) off = apply_transform(off, t);
  sort_cells(out.cells);
  if (out.hop_target) out.hop_target = apply_transform(*out.hop_target, t);
  for (auto& a : out.anchors) a = apply_transform(a, t);
  std::sort(out.anchors.begin(), out.anchors.end());
  return out;
}

PatternSpec PatternSpec::mirrored_at_diagonal() const {
  PatternSpec out = *this;
  for (auto& [off, cell] : out.cells) off = mirror_diagonal(off);
  sort_cells(out.cells);
  if (out.hop_target) out.hop_target = mirror_diagonal(*out.hop_target);
  for (auto& a : out.anchors) a = mirror_diagonal(a);
  std::sort(out.anchors.begin(), out.anchors.end());
  return out;
}

std::vector<PatternSpec> transforms_of(const PatternSpec& p) {
  std::vector<PatternSpec> out;
  for (Transform t : kAllTransforms) {
    PatternSpec img = p.transformed(t);
    bool dup = false;
    for (const PatternSpec& prev : out) {
      if (prev.cells == img.cells && prev.hop_target == img.hop_target &&
          prev.anchors == img.anchors) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(img));
  }
  return out;
}

const PatternSpec* PatternLibrary::find(const std::string& id) const {
  for (const PatternSpec& s : specs)
    if (s.id == id) return &s;
  return nullptr;
}

std::vector<const PatternSpec*> PatternLibrary::of_kind(PatternKind k) const {
  std::vector<const PatternSpec*> out;
  for (const PatternSpec& s : specs)
    if (s.kind == k) out.push_back(&s);
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& id, const std::string& what) {
  throw validation_error("pattern '" + (id.empty() ? "?" : id) + "': " + what);
}

std::optional<PatternKind> parse_kind(const std::string& s) {
  if (s == "DiagA") return PatternKind::DiagA;
  if (s == "DiagB") return PatternKind::DiagB;
  if (s == "Inhibit1") return PatternKind::Inhibit1;
  if (s == "Inhibit2") return PatternKind::Inhibit2;
  if (s == "Inhibit3") return PatternKind::Inhibit3;
  if (s == "HV1") return PatternKind::HV1;
  if (s == "HV2") return PatternKind::HV2;
  return std::nullopt;
}

bool is_grid_line(const std::string& line) {
  if (line.empty()) return false;
  for (char ch : line)
    if (ch != '#' && ch != 'o' && ch != '.' && ch != '@' && ch != '*')
      return false;
  return true;
}

void validate_spec(const PatternSpec& p) {
  if (!p.requires_robot({0, 0})) fail(p.id, "cell at (0,0) must be a robot");
  // For inhibit templates decidability is a property of the anchored
  // placement, checked below; hop pattern cells must fit directly.
  if (!is_inhibit(p.kind)) {
    for (const auto& [off, cell] : p.cells) {
      (void)cell;
      if (std::llabs(off.x) + std::llabs(off.y) > Snapshot::kViewRadius)
        fail(p.id, "cell offset outside the L1-7 viewing range");
    }
  }
  if (is_inhibit(p.kind)) {
    if (p.hop_target) fail(p.id, "inhibit patterns have no hop target");
    if (p.anchors.empty()) fail(p.id, "inhibit pattern needs an anchor line");
    for (Coord a : p.anchors)
      for (const auto& [off, cell] : p.cells) {
        (void)cell;
        const Coord placed = a + off;
        if (std::llabs(placed.x) + std::llabs(placed.y) > Snapshot::kViewRadius)
          fail(p.id, "anchored cell outside the L1-7 viewing range");
      }
    return;
  }
  if (!p.anchors.empty()) fail(p.id, "hop patterns take no anchor lines");
  if (!p.hop_target) fail(p.id, "hop pattern needs a target");
  const Coord t = *p.hop_target;
  switch (p.kind) {
    case PatternKind::DiagA:
    case PatternKind::DiagB:
      if (std::llabs(t.x) != 1 || std::llabs(t.y) != 1)
        fail(p.id, "diagonal hop target must be a diagonal unit offset");
      break;
    case PatternKind::HV1:
      if (std::llabs(t.x) + std::llabs(t.y) != 1)
        fail(p.id, "HV1 target must be an axis unit offset");
      break;
    case PatternKind::HV2:
      if (!((t.x == 0 && std::llabs(t.y) == 2) ||
            (t.y == 0 && std::llabs(t.x) == 2)))
        fail(p.id, "HV2 target must be an axis offset of length 2");
      break;
    default: break;
  }
}

void validate_library(const PatternLibrary& lib) {
  if (lib.specs.empty()) throw validation_error("pattern file defines no patterns");
  std::map<std::string, int> ids;
  std::map<PatternKind, int> kinds;
  for (const PatternSpec& p : lib.specs) {
    if (++ids[p.id] > 1) fail(p.id, "duplicate id");
    ++kinds[p.kind];
  }
  auto count = [&](PatternKind k) {
    auto it = kinds.find(k);
    return it == kinds.end() ? 0 : it->second;
  };
  if (count(PatternKind::DiagA) != 2)
    throw validation_error("library must contain exactly 2 DiagA patterns");
  if (count(PatternKind::DiagB) != 1)
    throw validation_error("library must contain exactly 1 DiagB pattern");
  for (PatternKind k :
       {PatternKind::Inhibit1, PatternKind::Inhibit2, PatternKind::Inhibit3})
    if (count(k) != 1)
      throw validation_error(std::string("library must contain exactly 1 ") +
                             to_string(k) + " pattern");
  if (count(PatternKind::HV1) < 1 || count(PatternKind::HV2) < 1)
    throw validation_error("library must contain HV patterns of lengths 1 and 2");
}

}  // namespace

PatternLibrary load_patterns(std::istream& source) {
  PatternLibrary lib;
  std::vector<std::string> lines;
  for (std::string line; std::getline(source, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }

  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() &&
           (lines[i].empty() || lines[i].rfind("//", 0) == 0))
      ++i;
  };

  skip_blank();
  if (i < lines.size()) {
    std::istringstream hs(lines[i]);
    std::string word, tag;
    if (hs >> word && word == "version" && hs >> tag) {
      lib.version = tag;
      ++i;
    }
  }

  while (true) {
    skip_blank();
    if (i >= lines.size()) break;

    PatternSpec spec;
    {
      std::istringstream hs(lines[i]);
      std::string kind_word;
      if (!(hs >> spec.id >> kind_word))
        throw validation_error("malformed header line: '" + lines[i] + "'");
      auto kind = parse_kind(kind_word);
      if (!kind) fail(spec.id, "unknown kind '" + kind_word + "'");
      spec.kind = *kind;
      std::int64_t dx = 0, dy = 0;
      if (hs >> dx >> dy) spec.hop_target = Coord{dx, dy};
      ++i;
    }

    while (i < lines.size() && lines[i].rfind("anchor", 0) == 0) {
      std::istringstream as(lines[i]);
      std::string word;
      std::int64_t dx = 0, dy = 0;
      if (!(as >> word >> dx >> dy)) fail(spec.id, "malformed anchor line");
      spec.anchors.push_back({dx, dy});
      ++i;
    }

    std::vector<std::string> grid;
    while (i < lines.size() && is_grid_line(lines[i])) {
      grid.push_back(lines[i]);
      ++i;
    }
    if (grid.empty()) fail(spec.id, "missing cell grid");

    std::optional<Coord> at;
    std::optional<Coord> star;
    for (std::size_t r = 0; r < grid.size(); ++r)
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        const Coord pos{static_cast<std::int64_t>(c),
                        static_cast<std::int64_t>(r)};
        switch (grid[r][c]) {
          case '@':
            if (at) fail(spec.id, "more than one '@' cell");
            at = pos;
            break;
          case '*':
            if (star) fail(spec.id, "more than one '*' cell");
            star = pos;
            break;
          default: break;
        }
      }
    if (!at) fail(spec.id, "grid has no '@' acting robot");

    for (std::size_t r = 0; r < grid.size(); ++r)
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        const Coord off{static_cast<std::int64_t>(c) - at->x,
                        static_cast<std::int64_t>(r) - at->y};
        switch (grid[r][c]) {
          case '#':
          case '@':
            spec.cells.push_back({off, PatternCell::RequireRobot});
            break;
          case 'o':
            spec.cells.push_back({off, PatternCell::RequireEmpty});
            break;
          default: break;  // '.' and '*' stay unconstrained
        }
      }
    sort_cells(spec.cells);

    if (star) {
      const Coord star_off = *star - *at;
      if (spec.hop_target && *spec.hop_target != star_off)
        fail(spec.id, "'*' marker disagrees with the header target");
      if (!spec.hop_target) spec.hop_target = star_off;
    }

    validate_spec(spec);
    lib.specs.push_back(std::move(spec));
  }

  validate_library(lib);
  return lib;
}

PatternLibrary load_patterns_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_patterns(in);
}

PatternLibrary load_patterns_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open pattern file: " + path);
  return load_patterns(in);
}

const std::string& default_patterns_text() {
  static const std::string text{kDefaultPatternsText};
  return text;
}

const PatternLibrary& default_patterns() {
  static const PatternLibrary lib = load_patterns_from_string(default_patterns_text());
  return lib;
}

bool match_at(const Snapshot& snap, const PatternSpec& p, Transform t) {
  for (const auto& [off, cell] : p.cells) {
    const bool occ = snap.occupied(apply_transform(off, t));
    if (cell == PatternCell::RequireRobot && !occ) return false;
    if (cell == PatternCell::RequireEmpty && occ) return false;
  }
  return true;
}

namespace {

bool inhibit_matches_at(const Snapshot& snap, const PatternSpec& inh,
                        Coord anchor, Transform t, bool mirror_at_d) {
  for (const auto& [off, cell] : inh.cells) {
    Coord placed = anchor + off;
    if (mirror_at_d) placed = mirror_diagonal(placed);
    const bool occ = snap.occupied(apply_transform(placed, t));
    if (cell == PatternCell::RequireRobot && !occ) return false;
    if (cell == PatternCell::RequireEmpty && occ) return false;
  }
  return true;
}

std::vector<std::string> matching_inhibitors(const Snapshot& snap, Transform t,
                                             const PatternLibrary& lib,
                                             bool mirror_at_d) {
  std::vector<std::string> out;
  for (const PatternSpec& p : lib.specs) {
    if (!is_inhibit(p.kind)) continue;
    for (Coord a : p.anchors) {
      if (inhibit_matches_at(snap, p, a, t, mirror_at_d)) {
        out.push_back(p.id);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool check_inhibit(const Snapshot& snap, PatternKind hop_kind, Transform t,
                   const PatternLibrary& lib) {
  const auto area1 = matching_inhibitors(snap, t, lib, false);
  if (hop_kind == PatternKind::DiagA) return !area1.empty();
  const auto area2 = matching_inhibitors(snap, t, lib, true);
  return !area1.empty() && !area2.empty();
}

HopDecision find_hop(const Snapshot& snap, const PatternLibrary& lib,
                     const MatchOptions& opts) {
  struct Match {
    const PatternSpec* spec;
    Transform t;
    Coord target;
  };
  std::vector<Match> hv_h, hv_v, diag;
  HopDecision decision;

  for (const PatternSpec& p : lib.specs) {
    if (is_inhibit(p.kind)) continue;
    for (Transform t : kAllTransforms) {
      if (!match_at(snap, p, t)) continue;
      const Coord target = apply_transform(*p.hop_target, t);
      if (is_diag(p.kind)) {
        const auto area1 = matching_inhibitors(snap, t, lib, false);
        bool inhibited;
        if (p.kind == PatternKind::DiagA) {
          inhibited = !area1.empty();
          if (inhibited)
            decision.inhibited_by.insert(decision.inhibited_by.end(),
                                         area1.begin(), area1.end());
        } else {
          const auto area2 = matching_inhibitors(snap, t, lib, true);
          inhibited = !area1.empty() && !area2.empty();
          if (inhibited) {
            decision.inhibited_by.insert(decision.inhibited_by.end(),
                                         area1.begin(), area1.end());
            decision.inhibited_by.insert(decision.inhibited_by.end(),
                                         area2.begin(), area2.end());
          }
        }
        if (!inhibited) diag.push_back({&p, t, target});
      } else if (target.y == 0) {
        hv_h.push_back({&p, t, target});
      } else {
        hv_v.push_back({&p, t, target});
      }
    }
  }

  std::sort(decision.inhibited_by.begin(), decision.inhibited_by.end());
  decision.inhibited_by.erase(
      std::unique(decision.inhibited_by.begin(), decision.inhibited_by.end()),
      decision.inhibited_by.end());

  // Candidate targets with provenance, library/transform order preserved.
  std::vector<Match> candidates = diag;
  if (!hv_h.empty() && !hv_v.empty()) {
    // Sanctioned combination: one horizontal and one vertical HV hop merge
    // into the unit diagonal between them.
    const Match& h = hv_h.front();
    const Match& v = hv_v.front();
    Match combined{h.spec, h.t,
                   Coord{h.target.x > 0 ? 1 : -1, v.target.y > 0 ? 1 : -1}};
    candidates.push_back(combined);
    decision.pattern_id = h.spec->id + "+" + v.spec->id;
  } else {
    candidates.insert(candidates.end(), hv_h.begin(), hv_h.end());
    candidates.insert(candidates.end(), hv_v.begin(), hv_v.end());
  }

  if (candidates.empty()) return decision;  // Stay

  std::vector<Coord> targets;
  for (const Match& m : candidates)
    if (std::find(targets.begin(), targets.end(), m.target) == targets.end())
      targets.push_back(m.target);

  if (targets.size() > 1) {
    if (opts.strict_conflicts) {
      std::ostringstream msg;
      msg << "ambiguous hop: patterns";
      for (const Match& m : candidates) msg << " " << m.spec->id;
      msg << " imply " << targets.size() << " distinct targets";
      throw ambiguity_error(msg.str());
    }
    decision.kind = HopDecision::Kind::Stay;
    decision.conflict_warning = true;
    return decision;
  }

  // Degenerate transcription: a target equal to the own cell is a Stay.
  if (targets.front() == Coord{0, 0}) return decision;

  decision.kind = HopDecision::Kind::Hop;
  decision.delta = targets.front();
  if (decision.pattern_id.empty()) decision.pattern_id = candidates.front().spec->id;
  decision.transform = candidates.front().t;
  return decision;
}

}  // namespace gather
