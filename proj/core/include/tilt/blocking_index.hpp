#pragma once

#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "tilt/polyomino.hpp"

namespace tilt {

// Per-row and per-column ordered indexes over a set of tiles. Answers
// "is position p blocked from direction d" with three ordered-set probes,
// supports O(log N) insert/remove, nearest-blocker queries, the 12-cell
// frontier refresh after a removal, and arrival-landing queries.
//
// The indexed set does not have to be a connected polyomino.
// Single writer; concurrent read-only queries are fine between mutations.
class BlockingIndex {
 public:
  BlockingIndex() = default;
  explicit BlockingIndex(const Polyomino& p);
  explicit BlockingIndex(const std::vector<Cell2>& cells);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(Cell2 t) const;

  // Throw std::invalid_argument on double insert / double remove.
  void insert(Cell2 t);
  void remove(Cell2 t);

  // True iff the blocking set of p for direction d is nonempty, i.e. some
  // tile lies beyond p in direction d within lanes {lane-1, lane, lane+1}.
  // p itself need not (and may) be indexed; it never blocks itself.
  bool is_blocked(Cell2 p, Direction2 d) const;

  // Nearest indexed tile strictly beyond p in direction d within the single
  // parallel lane `lane` (a column for north/south, a row for east/west).
  std::optional<Cell2> nearest_beyond(Cell2 p, Direction2 d, std::int32_t lane) const;

  // The up-to-12 tiles that can change blocked/convex/candidate status after
  // removing t: per direction, the nearest tile beyond t in each of the three
  // lanes around t. Deduplicated, sorted. Call after remove(t).
  std::vector<Cell2> frontier_after_removal(Cell2 t) const;

  // Landing cell of a tile sent from direction `from` along `lane`, or
  // nullopt when the lane trio contains no tile (the step is a no-op).
  std::optional<Cell2> landing(Direction2 from, std::int32_t lane) const;

 private:
  using LaneMap = std::unordered_map<std::int32_t, std::set<std::int32_t>>;
  LaneMap cols_;  // x -> set of y
  LaneMap rows_;  // y -> set of x
  std::size_t size_ = 0;
};

}  // namespace tilt
