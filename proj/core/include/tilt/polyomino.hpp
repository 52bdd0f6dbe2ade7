#pragma once

#include <cstddef>
#include <vector>

#include "tilt/grid.hpp"

namespace tilt {

// A finite, nonempty set of lattice cells whose dual grid graph (unit-distance
// adjacency) is connected. Cells are kept sorted by (x, y). Immutable value
// type; congruence is translation-only.
class Polyomino {
 public:
  // Validates: nonempty, no duplicates, connected. Throws std::invalid_argument.
  explicit Polyomino(std::vector<Cell2> cells);

  // Fast path for callers that guarantee the invariants (enumeration, replay).
  static Polyomino unchecked(std::vector<Cell2> sorted_unique_connected);

  const std::vector<Cell2>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(Cell2 c) const;
  Cell2 min_corner() const;
  Cell2 max_corner() const;

  bool operator==(const Polyomino&) const = default;

 private:
  Polyomino() = default;
  std::vector<Cell2> cells_;
};

// 3D analog under face (6-)adjacency.
class Polycube {
 public:
  explicit Polycube(std::vector<Cell3> cells);
  static Polycube unchecked(std::vector<Cell3> sorted_unique_connected);

  const std::vector<Cell3>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(Cell3 c) const;
  Cell3 min_corner() const;
  Cell3 max_corner() const;

  bool operator==(const Polycube&) const = default;

 private:
  Polycube() = default;
  std::vector<Cell3> cells_;
};

// True iff the unit-distance adjacency graph on `cells` is connected.
// Empty set -> false, singleton -> true. Input is treated as a set.
bool is_connected(const std::vector<Cell2>& cells);
bool is_connected(const std::vector<Cell3>& cells);

// True iff the complement of P is connected (P is hole-free).
bool is_simple(const Polyomino& p);

// Tiles t such that some 2x2 window contains t and no other tile of P.
std::vector<Cell2> convex_tiles(const Polyomino& p);
bool is_convex_tile(const Polyomino& p, Cell2 t);

// True iff removing t disconnects P. For a convex tile of a simple polyomino
// this is answered from the 3x3 neighborhood; otherwise by flood fill.
// Throws std::invalid_argument if t is not in P.
bool is_cut_tile(const Polyomino& p, Cell2 t);

// Flood-fill reference used as the validation oracle for the local rule.
bool is_cut_tile_exact(const Polyomino& p, Cell2 t);

// Translate so the bounding-box minimum lands at the origin.
Polyomino canonicalize(const Polyomino& p);
Polycube canonicalize(const Polycube& p);

// True iff G_P is a tree (|edges| == N - 1).
bool is_tree_shaped(const Polyomino& p);

// Number of unordered adjacent pairs in P.
std::size_t adjacency_count(const Polyomino& p);

}  // namespace tilt
