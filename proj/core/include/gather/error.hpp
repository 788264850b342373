#pragma once

#include <stdexcept>
#include <string>

namespace gather {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside a precondition (empty swarm, bad
// generator parameter, unoccupied snapshot center, ...).
struct invalid_input : error {
  using error::error;
};

// Pattern file failed validation; message names the offending pattern id.
struct validation_error : error {
  using error::error;
};

// Strict mode: uninhibited matches imply two or more distinct targets.
struct ambiguity_error : error {
  using error::error;
};

// A monitored lemma failed on a round transition.
struct lemma_violation : error {
  using error::error;
};

// Engine invariant broke (post-round connectivity); indicates a pattern
// transcription bug, not a user error.
struct invariant_violation : error {
  using error::error;
};

}  // namespace gather
