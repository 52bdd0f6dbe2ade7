#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilt/blocking_index.hpp"
#include "tilt/polyomino.hpp"

namespace tilt {

// One tile sent from `direction` along `lane` (a column for north/south,
// a row for east/west), sliding until it sticks to the assembly.
struct ConstructionStep {
  Direction2 direction;
  std::int32_t lane;
  bool operator==(const ConstructionStep&) const = default;
};

// Seed cell plus the ordered steps that grow it into the target shape.
// Lanes are expressed in the global frame of the final shape; the seed's
// absolute position anchors the replay.
struct ConstructionSequence {
  Cell2 seed;
  std::vector<ConstructionStep> steps;
  bool operator==(const ConstructionSequence&) const = default;
};

enum class DecisionStatus : std::uint8_t {
  constructible,
  not_constructible,
  not_supported,
  resource_limit,
};

struct DecisionResult {
  DecisionStatus status;
  std::optional<ConstructionSequence> sequence;  // set iff constructible
  std::string reason;
  std::uint64_t explored_states = 0;

  bool ok() const { return status == DecisionStatus::constructible; }
};

// Landing cell of a step applied to P, or nullopt when the lane trio holds no
// tile and the polyomino does not change. O(N) scan; use BlockingIndex for
// incremental replay.
std::optional<Cell2> landing_cell(const Polyomino& p, ConstructionStep s);

// P plus the arriving tile, or nullopt on a no-op step.
std::optional<Polyomino> apply_step(const Polyomino& p, ConstructionStep s);

// Directions whose blocking set at t (t itself excluded) is empty. A removal
// in such a direction is valid iff P minus t additionally stays connected.
// Order: n, e, s, w. Throws std::invalid_argument if t is not in P.
std::vector<Direction2> removal_directions(const Polyomino& p, Cell2 t);

struct VerifyResult {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // index into steps
  std::string reason;
  std::optional<Polyomino> built;  // what the replay produced, when any

  explicit operator bool() const { return ok; }
};

// Replays seed + steps; fails on any no-op step; succeeds iff the result is a
// translated copy of p.
VerifyResult verify(const Polyomino& p, const ConstructionSequence& seq);

// Greedy convex-tile decider for hole-free polyominoes, O(N log N).
// Returns not_supported for non-simple input. A forced seed is honored by
// never removing that tile; throws std::invalid_argument if it is not in P.
DecisionResult decide_simple(const Polyomino& p,
                             std::optional<Cell2> forced_seed = std::nullopt);

inline constexpr std::size_t kDefaultExactLimit = 12;

// Memoized exact search over decomposition orders. Handles non-simple input.
// States above `limit` cells return resource_limit. The shared memo table is
// capped via the TILT_MEMO_CAP environment variable (entry count).
DecisionResult decide_exact(const Polyomino& p, std::size_t limit = kDefaultExactLimit);

// Sequence text format: `seed x y`, then `step <n|e|s|w> <lane>` lines.
// Comments start with '#'.
std::string render_sequence(const ConstructionSequence& seq);
ConstructionSequence parse_sequence(const std::string& text);

}  // namespace tilt
