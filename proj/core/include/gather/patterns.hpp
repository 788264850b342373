#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gather/geometry.hpp"
#include "gather/snapshot.hpp"

namespace gather {

enum class PatternCell { RequireRobot, RequireEmpty, DontCare };

enum class PatternKind { DiagA, DiagB, Inhibit1, Inhibit2, Inhibit3, HV1, HV2 };

const char* to_string(PatternKind k);
bool is_inhibit(PatternKind k);
bool is_diag(PatternKind k);
bool is_hv(PatternKind k);

// One template: constrained cells relative to the acting robot at (0,0),
// plus a hop target (hop kinds) or anchor placements (inhibit kinds).
struct PatternSpec {
  std::string id;
  PatternKind kind = PatternKind::DiagA;
  // Only constrained cells are stored; everything else is DontCare.
  std::vector<std::pair<Coord, PatternCell>> cells;  // sorted by offset
  std::optional<Coord> hop_target;                   // hop kinds
  std::vector<Coord> anchors;                        // inhibit kinds

  bool requires_robot(Coord off) const;
  bool requires_empty(Coord off) const;

  // Image under a grid symmetry, hop target transformed consistently.
  PatternSpec transformed(Transform t) const;

  // Image mirrored at the Diag-B axis D (the diagonal through the hop).
  PatternSpec mirrored_at_diagonal() const;
};

// The <= 8 distinct images of p under the dihedral group.
std::vector<PatternSpec> transforms_of(const PatternSpec& p);

struct PatternLibrary {
  std::string version;
  std::vector<PatternSpec> specs;  // library order = file order

  const PatternSpec* find(const std::string& id) const;
  std::vector<const PatternSpec*> of_kind(PatternKind k) const;
};

// Parse + validate the pattern-definition text format (see
// docs/pattern-format.md). Throws validation_error naming the pattern id.
PatternLibrary load_patterns(std::istream& source);
PatternLibrary load_patterns_from_string(const std::string& text);
PatternLibrary load_patterns_from_file(const std::string& path);

// The library transcribed for this artifact, embedded at build time.
// GATHER_PATTERNS in the environment overrides the path-based loaders in
// the CLI; this accessor always returns the embedded copy.
const PatternLibrary& default_patterns();
const std::string& default_patterns_text();

// True iff every constrained cell of p holds in snap under t.
bool match_at(const Snapshot& snap, const PatternSpec& p, Transform t);

// Inhibit check for a Diag hop matched under t. Diag-A is suppressed by a
// single inhibit match in its check area; Diag-B needs a match in the area
// *and* in the area mirrored at the diagonal axis D.
bool check_inhibit(const Snapshot& snap, PatternKind hop_kind, Transform t,
                   const PatternLibrary& lib);

struct HopDecision {
  enum class Kind { Stay, Hop };
  Kind kind = Kind::Stay;
  Coord delta{0, 0};  // king move, or axis move of length 2 (HV2)

  // Provenance for traces and fixtures.
  std::string pattern_id;             // matched pattern(s); "a+b" if combined
  Transform transform{};              // transform of the (first) match
  std::vector<std::string> inhibited_by;  // inhibitors that suppressed matches
  bool conflict_warning = false;      // lenient mode: ambiguous, stayed

  bool hops() const { return kind == Kind::Hop; }
};

struct MatchOptions {
  bool strict_conflicts = true;
};

// The per-robot decision function of the round loop: find all
// matching hop patterns over the 8 symmetries, apply inhibit checks, resolve
// HV combinations, and produce Stay or Hop. Throws ambiguity_error in strict
// mode when two distinct targets survive.
HopDecision find_hop(const Snapshot& snap, const PatternLibrary& lib,
                     const MatchOptions& opts = {});

}  // namespace gather
