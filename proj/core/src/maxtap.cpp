#include "tilt/maxtap.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace tilt {

void validate_path(const TilePath& path) {
  if (path.cells.empty()) throw std::invalid_argument("path must be nonempty");
  std::unordered_set<Cell2> seen;
  for (std::size_t i = 0; i < path.cells.size(); ++i) {
    if (!seen.insert(path.cells[i]).second)
      throw std::invalid_argument("path revisits a cell");
    if (i > 0) {
      const Cell2 d = path.cells[i] - path.cells[i - 1];
      if (std::abs(d.x) + std::abs(d.y) != 1)
        throw std::invalid_argument("path cells are not consecutively adjacent");
    }
  }
}

bool is_path_sequentially_constructible(const TilePath& path) {
  validate_path(path);
  BlockingIndex index;
  index.insert(path.cells.front());
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    const Cell2 c = path.cells[i];
    bool insertable = false;
    for (Direction2 d : kAllDirections2) {
      if (!index.is_blocked(c, d)) {
        insertable = true;
        break;
      }
    }
    if (!insertable) return false;
    index.insert(c);
  }
  return true;
}

ConstructionSequence path_sequence(const TilePath& path) {
  validate_path(path);
  ConstructionSequence seq;
  seq.seed = path.cells.front();
  BlockingIndex index;
  index.insert(seq.seed);
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    const Cell2 c = path.cells[i];
    std::optional<Direction2> dir;
    for (Direction2 d : kAllDirections2) {
      if (!index.is_blocked(c, d)) {
        dir = d;
        break;
      }
    }
    if (!dir) throw std::invalid_argument("path is not sequentially constructible");
    seq.steps.push_back({*dir, lane_coordinate(c, *dir)});
    index.insert(c);
  }
  return seq;
}

namespace {

std::vector<Cell2> canonical_cells(std::vector<Cell2> cells) {
  Cell2 lo = cells.front();
  for (Cell2 c : cells) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
  }
  for (Cell2& c : cells) c = c - lo;
  return cells;
}

// Longer paths win; ties break toward the lexicographically smallest
// canonical cell sequence.
void update_best(TilePath& best, const std::vector<Cell2>& candidate) {
  if (candidate.size() < best.cells.size()) return;
  if (candidate.size() > best.cells.size()) {
    best.cells = candidate;
    return;
  }
  if (canonical_cells(candidate) < canonical_cells(best.cells)) best.cells = candidate;
}

// Neighbor order chosen so cells come out in canonical (x, y) order.
constexpr std::array<Direction2, 4> kCanonicalNeighborOrder = {
    Direction2::west, Direction2::south, Direction2::north, Direction2::east};

}  // namespace

MaxTapResult exact_maxtap(const Polyomino& p, std::size_t limit) {
  if (p.size() > limit)
    throw resource_limit_error("maxtap instance larger than the exact-search limit");
  if (DecisionResult whole = decide_exact(p, limit); whole.ok())
    return {p, *whole.sequence, MaxTapKind::exact};
  const auto& cells = p.cells();
  const std::size_t n = cells.size();
  std::unordered_map<Cell2, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(cells[i], i);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Direction2 d : kAllDirections2)
      if (auto it = index_of.find(cells[i] + unit(d)); it != index_of.end())
        adj[i].push_back(it->second);

  std::optional<std::vector<Cell2>> best;
  auto consider = [&](const std::vector<std::size_t>& subset) {
    if (best && subset.size() < best->size()) return;
    std::vector<Cell2> sub;
    sub.reserve(subset.size());
    for (std::size_t i : subset) sub.push_back(cells[i]);
    std::sort(sub.begin(), sub.end());
    if (best && subset.size() == best->size() &&
        !(canonical_cells(sub) < canonical_cells(*best)))
      return;
    Polyomino shape = Polyomino::unchecked(sub);
    if (decide_exact(shape, limit).ok()) best = std::move(sub);
  };

  // Rooted connected-subset enumeration: every subset is visited once, from
  // its minimum-index cell, growing only through larger indexes.
  std::vector<std::size_t> shape_ixs, untried;
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(seen.begin(), seen.end(), 0);
    untried.assign(1, root);
    seen[root] = 1;
    auto grow = [&](auto&& self, std::size_t begin, std::size_t end) -> void {
      for (std::size_t i = begin; i < end; ++i) {
        shape_ixs.push_back(untried[i]);
        consider(shape_ixs);
        const std::size_t prev = untried.size();
        for (std::size_t nb : adj[untried[i]])
          if (nb > root && !seen[nb]) {
            seen[nb] = 1;
            untried.push_back(nb);
          }
        self(self, i + 1, untried.size());
        for (std::size_t k = prev; k < untried.size(); ++k) seen[untried[k]] = 0;
        untried.resize(prev);
        shape_ixs.pop_back();
      }
    };
    grow(grow, 0, 1);
  }

  Polyomino subshape = Polyomino::unchecked(*best);
  DecisionResult d = decide_exact(subshape, limit);
  return {subshape, *d.sequence, MaxTapKind::exact};
}

namespace {

struct PathSearcher {
  const Polyomino& p;
  BlockingIndex index;
  std::vector<Cell2> path;
  TilePath best;

  explicit PathSearcher(const Polyomino& poly) : p(poly) {}

  bool insertable(Cell2 c) const {
    for (Direction2 d : kAllDirections2)
      if (!index.is_blocked(c, d)) return true;
    return false;
  }

  // DFS over G_P restricted to a tree (parent pointers prevent backtracking).
  void dfs_tree(Cell2 cur, std::optional<Cell2> parent) {
    update_best(best, path);
    for (Direction2 nd : kCanonicalNeighborOrder) {
      const Cell2 nb = cur + unit(nd);
      if (!p.contains(nb) || (parent && nb == *parent)) continue;
      if (!insertable(nb)) continue;  // deeper tiles cannot be added either
      index.insert(nb);
      path.push_back(nb);
      dfs_tree(nb, cur);
      path.pop_back();
      index.remove(nb);
    }
  }

  void run_from(Cell2 start) {
    index = BlockingIndex();
    index.insert(start);
    path.assign(1, start);
    dfs_tree(start, std::nullopt);
  }
};

}  // namespace

TilePath longest_sequential_path_tree(const Polyomino& p) {
  if (!is_tree_shaped(p))
    throw std::invalid_argument("polyomino is not tree-shaped");
  PathSearcher searcher(p);
  searcher.best.cells = {p.cells().front()};
  for (Cell2 s : p.cells()) searcher.run_from(s);
  return searcher.best;
}

TilePath longest_constructible_shortest_path(const Polyomino& p) {
  if (!is_simple(p)) throw std::invalid_argument("polyomino is not simple");
  TilePath best;
  best.cells = {p.cells().front()};

  std::vector<Cell2> path;
  BlockingIndex index;
  std::unordered_map<Cell2, std::vector<Cell2>> children;

  auto dfs = [&](auto&& self, Cell2 cur) -> void {
    update_best(best, path);
    for (Cell2 nb : children[cur]) {
      bool ok = false;
      for (Direction2 d : kAllDirections2)
        if (!index.is_blocked(nb, d)) {
          ok = true;
          break;
        }
      if (!ok) continue;
      index.insert(nb);
      path.push_back(nb);
      self(self, nb);
      path.pop_back();
      index.remove(nb);
    }
  };

  for (Cell2 source : p.cells()) {
    // BFS tree: each root-to-node path is one shortest path, and testing one
    // shortest path per pair suffices.
    children.clear();
    std::unordered_set<Cell2> visited{source};
    std::queue<Cell2> q;
    q.push(source);
    while (!q.empty()) {
      Cell2 cur = q.front();
      q.pop();
      for (Direction2 nd : kCanonicalNeighborOrder) {
        Cell2 nb = cur + unit(nd);
        if (!p.contains(nb) || !visited.insert(nb).second) continue;
        children[cur].push_back(nb);
        q.push(nb);
      }
    }
    index = BlockingIndex();
    index.insert(source);
    path.assign(1, source);
    dfs(dfs, source);
  }
  return best;
}

SqrtBoundResult maxtap_sqrt_bound(const Polyomino& p, std::size_t exact_limit) {
  SqrtBoundResult r;
  r.path = longest_sequential_path_tree(p);
  if (p.size() <= exact_limit) {
    MaxTapResult m = exact_maxtap(p, exact_limit);
    r.opt_size = m.subshape.size();
    const double len = static_cast<double>(r.path.length());
    r.certificate = 4.0 * len * len / static_cast<double>(*r.opt_size);
  }
  return r;
}

}  // namespace tilt
