#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tilt/polyomino.hpp"

namespace tilt {

// A rigid set of bonded tiles. Relative offsets never change; the whole
// assembly translates as one body.
struct Assembly {
  std::uint64_t id = 0;  // birth order; a merge keeps the smallest id
  std::vector<Cell2> cells;  // sorted
};

struct SettleStats {
  int moved_assemblies = 0;
  int merges = 0;
};

// Obstacle maze with rigid sticky assemblies under a global tilt force.
// One unit step (`settle`) slides every assembly as far as it can go in the
// force direction, iterating to a fixed point, then bonds any assemblies
// that ended up 4-adjacent. Walls are static and never bond.
class TiltWorld {
 public:
  explicit TiltWorld(const std::vector<Cell2>& walls);

  bool is_wall(Cell2 c) const { return walls_.count(c) != 0; }
  bool is_occupied(Cell2 c) const;  // by any assembly tile

  // Returns the new assembly's id. Throws if any cell is a wall or occupied.
  std::uint64_t add_assembly(const std::vector<Cell2>& cells);

  // The force direction is the motion direction. Throws on unbounded slides
  // (the world must have a closed obstacle frontier).
  SettleStats settle(Direction2 force);

  // Deterministic-fixed-point check hook: settle processing the assemblies in
  // the given order. The result must not depend on it.
  SettleStats settle_with_order(Direction2 force, const std::vector<std::size_t>& order);

  const std::vector<Assembly>& assemblies() const { return assemblies_; }
  const std::unordered_set<Cell2>& walls() const { return walls_; }

  // ASCII frame: '#' wall, '.' free, 'a'..'z' assembly tiles (id mod 26).
  std::string render_frame() const;

 private:
  std::int64_t slide_distance(const Assembly& a, Direction2 force) const;
  int bond_pass();

  std::unordered_set<Cell2> walls_;
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> wall_cols_;  // x -> sorted ys
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> wall_rows_;  // y -> sorted xs
  std::vector<Assembly> assemblies_;
  std::uint64_t next_id_ = 0;
};

}  // namespace tilt
