#include "tilt/polyomino.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace tilt {

namespace {

template <typename Cell>
void sort_cells(std::vector<Cell>& cells) {
  std::sort(cells.begin(), cells.end());
}

}  // namespace

Polyomino::Polyomino(std::vector<Cell2> cells) {
  sort_cells(cells);
  if (cells.empty()) throw std::invalid_argument("polyomino must be nonempty");
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("polyomino has duplicate cells");
  if (!is_connected(cells))
    throw std::invalid_argument("polyomino cells are not connected");
  cells_ = std::move(cells);
}

Polyomino Polyomino::unchecked(std::vector<Cell2> cells) {
  Polyomino p;
  p.cells_ = std::move(cells);
  return p;
}

bool Polyomino::contains(Cell2 c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Cell2 Polyomino::min_corner() const {
  Cell2 m = cells_.front();
  for (Cell2 c : cells_) {
    m.x = std::min(m.x, c.x);
    m.y = std::min(m.y, c.y);
  }
  return m;
}

Cell2 Polyomino::max_corner() const {
  Cell2 m = cells_.front();
  for (Cell2 c : cells_) {
    m.x = std::max(m.x, c.x);
    m.y = std::max(m.y, c.y);
  }
  return m;
}

Polycube::Polycube(std::vector<Cell3> cells) {
  sort_cells(cells);
  if (cells.empty()) throw std::invalid_argument("polycube must be nonempty");
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("polycube has duplicate cells");
  if (!is_connected(cells))
    throw std::invalid_argument("polycube cells are not connected");
  cells_ = std::move(cells);
}

Polycube Polycube::unchecked(std::vector<Cell3> cells) {
  Polycube p;
  p.cells_ = std::move(cells);
  return p;
}

bool Polycube::contains(Cell3 c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Cell3 Polycube::min_corner() const {
  Cell3 m = cells_.front();
  for (Cell3 c : cells_) {
    m.x = std::min(m.x, c.x);
    m.y = std::min(m.y, c.y);
    m.z = std::min(m.z, c.z);
  }
  return m;
}

Cell3 Polycube::max_corner() const {
  Cell3 m = cells_.front();
  for (Cell3 c : cells_) {
    m.x = std::max(m.x, c.x);
    m.y = std::max(m.y, c.y);
    m.z = std::max(m.z, c.z);
  }
  return m;
}

bool is_connected(const std::vector<Cell2>& cells) {
  if (cells.empty()) return false;
  std::unordered_set<Cell2> pending(cells.begin(), cells.end());
  std::queue<Cell2> frontier;
  frontier.push(*pending.begin());
  pending.erase(pending.begin());
  while (!frontier.empty()) {
    Cell2 c = frontier.front();
    frontier.pop();
    for (Direction2 d : kAllDirections2) {
      auto it = pending.find(c + unit(d));
      if (it != pending.end()) {
        frontier.push(*it);
        pending.erase(it);
      }
    }
  }
  return pending.empty();
}

bool is_connected(const std::vector<Cell3>& cells) {
  if (cells.empty()) return false;
  std::unordered_set<Cell3> pending(cells.begin(), cells.end());
  std::queue<Cell3> frontier;
  frontier.push(*pending.begin());
  pending.erase(pending.begin());
  while (!frontier.empty()) {
    Cell3 c = frontier.front();
    frontier.pop();
    for (Direction3 d : kAllDirections3) {
      auto it = pending.find(c + unit(d));
      if (it != pending.end()) {
        frontier.push(*it);
        pending.erase(it);
      }
    }
  }
  return pending.empty();
}

namespace {

// Complement flood fill over the bounding box inflated by one cell, seeded
// from the whole inflated border. Assumes the region fits in memory.
bool simple_by_flood(const Polyomino& p) {
  const Cell2 lo = p.min_corner() - Cell2{1, 1};
  const Cell2 hi = p.max_corner() + Cell2{1, 1};
  const std::int64_t w = static_cast<std::int64_t>(hi.x) - lo.x + 1;
  const std::int64_t h = static_cast<std::int64_t>(hi.y) - lo.y + 1;
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(w * h), 0);
  auto at = [&](std::int64_t x, std::int64_t y) -> std::uint8_t& {
    return grid[static_cast<std::size_t>((y - lo.y) * w + (x - lo.x))];
  };
  for (Cell2 c : p.cells()) at(c.x, c.y) = 1;  // tile

  std::size_t empty_total = static_cast<std::size_t>(w * h) - p.size();
  std::size_t reached = 0;
  std::vector<Cell2> stack;
  stack.push_back(lo);
  at(lo.x, lo.y) = 2;
  ++reached;
  while (!stack.empty()) {
    Cell2 c = stack.back();
    stack.pop_back();
    for (Direction2 d : kAllDirections2) {
      Cell2 n = c + unit(d);
      if (n.x < lo.x || n.x > hi.x || n.y < lo.y || n.y > hi.y) continue;
      std::uint8_t& cell = at(n.x, n.y);
      if (cell == 0) {
        cell = 2;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  return reached == empty_total;
}

// Euler characteristic of the union of closed unit squares: a connected
// polyomino is hole-free iff V + A - 3N == 1, with V the number of distinct
// square corners and A the number of adjacent pairs. Used when the inflated
// bounding box is too large to rasterize.
bool simple_by_euler(const Polyomino& p) {
  std::unordered_set<Cell2> corners;
  corners.reserve(p.size() * 4);
  for (Cell2 c : p.cells()) {
    corners.insert(c);
    corners.insert(c + Cell2{1, 0});
    corners.insert(c + Cell2{0, 1});
    corners.insert(c + Cell2{1, 1});
  }
  const std::int64_t v = static_cast<std::int64_t>(corners.size());
  const std::int64_t a = static_cast<std::int64_t>(adjacency_count(p));
  const std::int64_t n = static_cast<std::int64_t>(p.size());
  return v + a - 3 * n == 1;
}

}  // namespace

bool is_simple(const Polyomino& p) {
  const Cell2 lo = p.min_corner();
  const Cell2 hi = p.max_corner();
  const std::int64_t area = (static_cast<std::int64_t>(hi.x) - lo.x + 3) *
                            (static_cast<std::int64_t>(hi.y) - lo.y + 3);
  if (area <= std::max<std::int64_t>(static_cast<std::int64_t>(p.size()) * 32, 1 << 16))
    return simple_by_flood(p);
  return simple_by_euler(p);
}

bool is_convex_tile(const Polyomino& p, Cell2 t) {
  for (int dx : {-1, 1}) {
    for (int dy : {-1, 1}) {
      if (!p.contains({t.x + dx, t.y}) && !p.contains({t.x, t.y + dy}) &&
          !p.contains({t.x + dx, t.y + dy}))
        return true;
    }
  }
  return false;
}

std::vector<Cell2> convex_tiles(const Polyomino& p) {
  std::vector<Cell2> out;
  for (Cell2 t : p.cells())
    if (is_convex_tile(p, t)) out.push_back(t);
  return out;
}

bool is_cut_tile_exact(const Polyomino& p, Cell2 t) {
  if (!p.contains(t)) throw std::invalid_argument("tile not in polyomino");
  if (p.size() == 1) return false;
  std::unordered_set<Cell2> pending(p.cells().begin(), p.cells().end());
  pending.erase(t);
  std::vector<Cell2> stack{*pending.begin()};
  pending.erase(pending.begin());
  while (!stack.empty()) {
    Cell2 c = stack.back();
    stack.pop_back();
    for (Direction2 d : kAllDirections2) {
      auto it = pending.find(c + unit(d));
      if (it != pending.end()) {
        stack.push_back(*it);
        pending.erase(it);
      }
    }
  }
  return !pending.empty();
}

bool is_cut_tile(const Polyomino& p, Cell2 t) {
  if (!p.contains(t)) throw std::invalid_argument("tile not in polyomino");
  if (p.size() == 1) return false;
  if (is_convex_tile(p, t) && is_simple(p)) {
    const bool n = p.contains(t + Cell2{0, 1});
    const bool e = p.contains(t + Cell2{1, 0});
    const bool s = p.contains(t + Cell2{0, -1});
    const bool w = p.contains(t + Cell2{-1, 0});
    const int degree = int(n) + int(e) + int(s) + int(w);
    if (degree <= 1) return false;
    if (n && e) return !p.contains(t + Cell2{1, 1});
    if (e && s) return !p.contains(t + Cell2{1, -1});
    if (s && w) return !p.contains(t + Cell2{-1, -1});
    if (w && n) return !p.contains(t + Cell2{-1, 1});
    // Opposite neighbors cannot happen for a convex tile.
  }
  return is_cut_tile_exact(p, t);
}

Polyomino canonicalize(const Polyomino& p) {
  const Cell2 lo = p.min_corner();
  std::vector<Cell2> cells;
  cells.reserve(p.size());
  for (Cell2 c : p.cells()) cells.push_back(c - lo);
  return Polyomino::unchecked(std::move(cells));  // order preserved by translation
}

Polycube canonicalize(const Polycube& p) {
  const Cell3 lo = p.min_corner();
  std::vector<Cell3> cells;
  cells.reserve(p.size());
  for (Cell3 c : p.cells()) cells.push_back(c - lo);
  return Polycube::unchecked(std::move(cells));
}

std::size_t adjacency_count(const Polyomino& p) {
  std::size_t a = 0;
  for (Cell2 c : p.cells()) {
    if (p.contains(c + Cell2{1, 0})) ++a;
    if (p.contains(c + Cell2{0, 1})) ++a;
  }
  return a;
}

bool is_tree_shaped(const Polyomino& p) {
  return adjacency_count(p) == p.size() - 1;
}

}  // namespace tilt
