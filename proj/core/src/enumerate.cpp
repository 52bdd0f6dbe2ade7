#include "tilt/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace tilt {

namespace {

// Redelmeier's algorithm. Shapes are grown inside the half-plane
// {y > 0} ∪ {y == 0, x >= 0} with the forced first cell at the origin, which
// picks exactly one translate of every fixed polyomino.
struct Enumerator {
  int n;
  const std::function<void(const Polyomino&)>& visit;
  std::vector<Cell2> shape;
  std::vector<Cell2> untried;
  std::unordered_set<Cell2> seen;

  static bool in_half_plane(Cell2 c) { return c.y > 0 || (c.y == 0 && c.x >= 0); }

  void emit() {
    Cell2 lo = shape.front();
    for (Cell2 c : shape) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
    }
    std::vector<Cell2> cells;
    cells.reserve(shape.size());
    for (Cell2 c : shape) cells.push_back(c - lo);
    std::sort(cells.begin(), cells.end());
    visit(Polyomino::unchecked(std::move(cells)));
  }

  void grow(std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Cell2 c = untried[i];
      shape.push_back(c);
      if (static_cast<int>(shape.size()) == n) {
        emit();
      } else {
        const std::size_t prev_size = untried.size();
        for (Direction2 d : kAllDirections2) {
          Cell2 nb = c + unit(d);
          if (in_half_plane(nb) && seen.insert(nb).second) untried.push_back(nb);
        }
        grow(i + 1, untried.size());
        for (std::size_t k = prev_size; k < untried.size(); ++k) seen.erase(untried[k]);
        untried.resize(prev_size);
      }
      shape.pop_back();
    }
  }

  void run() {
    untried.push_back({0, 0});
    seen.insert({0, 0});
    grow(0, 1);
  }
};

}  // namespace

void for_each_fixed_polyomino(int n, const std::function<void(const Polyomino&)>& visit,
                              int max_n) {
  if (n < 1) throw std::invalid_argument("polyomino size must be positive");
  if (n > max_n)
    throw resource_limit_error("enumeration size exceeds the configured cap");
  Enumerator e{n, visit, {}, {}, {}};
  e.run();
}

std::vector<Polyomino> enumerate_polyominoes(int n, int max_n) {
  std::vector<Polyomino> out;
  for_each_fixed_polyomino(n, [&](const Polyomino& p) { out.push_back(p); }, max_n);
  return out;
}

}  // namespace tilt
