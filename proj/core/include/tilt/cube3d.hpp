#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilt/polyomino.hpp"
#include "tilt/tap.hpp"

namespace tilt {

// 3D construction step: arrival direction plus the lane line the cube travels
// along. Lane coordinates (a, b) are (x, y) for up/down arrivals, (x, z) for
// north/south, and (y, z) for east/west.
struct ConstructionStep3 {
  Direction3 direction;
  std::int32_t a;
  std::int32_t b;
  bool operator==(const ConstructionStep3&) const = default;
};

struct ConstructionSequence3 {
  Cell3 seed;
  std::vector<ConstructionStep3> steps;
  bool operator==(const ConstructionSequence3&) const = default;
};

struct CubePath {
  std::vector<Cell3> cells;
  std::size_t length() const { return cells.size(); }
};

// Blocking set test under the cross-shaped lane neighborhood: for an arrival
// from `d`, true iff some cube of P lies strictly beyond p in that direction
// within the arrival column or one of its four face-adjacent columns.
bool blocked_3d(const Polycube& p, Cell3 cell, Direction3 d);
bool blocked_3d(const std::vector<Cell3>& cells, Cell3 cell, Direction3 d);

// Landing cell of a cube sent from direction d along the lane line (a, b), or
// nullopt if the step is a no-op.
std::optional<Cell3> landing_cell_3d(const std::vector<Cell3>& cells, ConstructionStep3 s);

struct DecisionResult3 {
  DecisionStatus status;
  std::optional<ConstructionSequence3> sequence;
  std::string reason;
  std::uint64_t explored_states = 0;

  bool ok() const { return status == DecisionStatus::constructible; }
};

// Memoized exact decomposition search over removal orders restricted to
// `dirs`. Witness sequences replay via apply-step semantics.
DecisionResult3 decide_polycube(const Polycube& p, DirectionSet3 dirs,
                                std::size_t limit = 18);

struct PathResult3 {
  DecisionStatus status;  // constructible = found, not_constructible = none
  std::optional<CubePath> path;
  std::uint64_t explored_states = 0;

  bool ok() const { return status == DecisionStatus::constructible; }
};

// Search over simple paths from s to t whose prefixes are sequentially
// constructible (placed-prefix-only interference). Extensions whose next cube
// is blocked are pruned. node_budget bounds the explored path prefixes.
PathResult3 constructible_path_3d(const Polycube& p, Cell3 s, Cell3 t,
                                  std::uint64_t node_budget = 2'000'000,
                                  DirectionSet3 dirs = DirectionSet3::all6());

// (x, y) -> (x, y, 0).
Polycube flat_embedding(const Polyomino& p);

// Lift of a 2D sequence into the z = 0 plane (lateral arrivals only).
ConstructionSequence3 lift_sequence(const ConstructionSequence& seq);

// Replays seed + steps; empty optional on any no-op step.
std::optional<Polycube> replay_3d(const ConstructionSequence3& seq);

}  // namespace tilt
