#pragma once

#include <optional>

#include "tilt/tap.hpp"

namespace tilt {

// Ordered list of distinct, consecutively 4-adjacent cells.
struct TilePath {
  std::vector<Cell2> cells;

  std::size_t length() const { return cells.size(); }
  bool operator==(const TilePath&) const = default;
};

// Throws std::invalid_argument unless cells form a simple path.
void validate_path(const TilePath& path);

enum class MaxTapKind : std::uint8_t { exact, tree_path_approx, shortest_path_approx };

struct MaxTapResult {
  Polyomino subshape;
  ConstructionSequence sequence;
  MaxTapKind kind;
};

// Largest connected subshape of P that admits a construction sequence, with
// blocking evaluated only against already-placed tiles of the subshape.
// Exponential reference search; resource_limit_error above `limit`.
MaxTapResult exact_maxtap(const Polyomino& p, std::size_t limit = kDefaultExactLimit);

// True iff adding the cells in path order succeeds, each tile arriving from
// some direction whose blocking set against the placed prefix is empty.
// The initial tile is the seed (a leaf of the final path).
bool is_path_sequentially_constructible(const TilePath& path);

// Longest sequentially constructible path in a tree-shaped polyomino, by DFS
// from every start tile with incremental blocking updates; subtrees below a
// non-insertable tile are skipped. O(N^2 log N).
// Throws std::invalid_argument for non-tree input.
TilePath longest_sequential_path_tree(const Polyomino& p);

// Longest sequentially constructible shortest path in a simple polyomino:
// per source, a BFS tree is traversed depth-first with incremental blocking
// checks; one shortest path per pair suffices. O(N^2 log N).
// Throws std::invalid_argument for non-simple input.
TilePath longest_constructible_shortest_path(const Polyomino& p);

struct SqrtBoundResult {
  TilePath path;
  std::optional<std::uint64_t> opt_size;  // exact MaxTAP size when within limit
  std::optional<double> certificate;      // 4 * length^2 / OPT
};

// The tree-path approximation plus its certified bound (2*length)^2 >= OPT.
SqrtBoundResult maxtap_sqrt_bound(const Polyomino& p,
                                  std::size_t exact_limit = kDefaultExactLimit);

// Construction sequence that builds the path in path order. The path must be
// sequentially constructible.
ConstructionSequence path_sequence(const TilePath& path);

}  // namespace tilt
