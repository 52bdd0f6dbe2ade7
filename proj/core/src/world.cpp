#include "tilt/world.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace tilt {

TiltWorld::TiltWorld(const std::vector<Cell2>& walls) {
  walls_.reserve(walls.size() * 2);
  for (Cell2 w : walls) {
    if (walls_.insert(w).second) {
      wall_cols_[w.x].push_back(w.y);
      wall_rows_[w.y].push_back(w.x);
    }
  }
  for (auto& [x, ys] : wall_cols_) std::sort(ys.begin(), ys.end());
  for (auto& [y, xs] : wall_rows_) std::sort(xs.begin(), xs.end());
}

bool TiltWorld::is_occupied(Cell2 c) const {
  for (const Assembly& a : assemblies_)
    if (std::binary_search(a.cells.begin(), a.cells.end(), c)) return true;
  return false;
}

std::uint64_t TiltWorld::add_assembly(const std::vector<Cell2>& cells) {
  if (cells.empty()) throw std::invalid_argument("assembly must be nonempty");
  for (Cell2 c : cells)
    if (is_wall(c) || is_occupied(c))
      throw std::invalid_argument("assembly cell collides with the world");
  Assembly a;
  a.id = next_id_++;
  a.cells = cells;
  std::sort(a.cells.begin(), a.cells.end());
  assemblies_.push_back(std::move(a));
  return assemblies_.back().id;
}

std::int64_t TiltWorld::slide_distance(const Assembly& a, Direction2 force) const {
  const bool vertical = is_vertical(force);
  const bool increasing = (force == Direction2::north || force == Direction2::east);
  std::int64_t dist = std::numeric_limits<std::int64_t>::max();

  auto clip = [&](std::int32_t pos, std::int32_t blocker) {
    const std::int64_t gap = increasing ? std::int64_t(blocker) - pos - 1
                                        : std::int64_t(pos) - blocker - 1;
    dist = std::min(dist, gap);
  };

  for (Cell2 c : a.cells) {
    const std::int32_t lane = vertical ? c.x : c.y;
    const std::int32_t pos = vertical ? c.y : c.x;
    const auto& lane_map = vertical ? wall_cols_ : wall_rows_;
    if (auto it = lane_map.find(lane); it != lane_map.end()) {
      const auto& v = it->second;
      if (increasing) {
        auto ub = std::upper_bound(v.begin(), v.end(), pos);
        if (ub != v.end()) clip(pos, *ub);
      } else {
        auto lb = std::lower_bound(v.begin(), v.end(), pos);
        if (lb != v.begin()) clip(pos, *std::prev(lb));
      }
    }
    for (const Assembly& other : assemblies_) {
      if (other.id == a.id) continue;
      for (Cell2 o : other.cells) {
        const std::int32_t olane = vertical ? o.x : o.y;
        if (olane != lane) continue;
        const std::int32_t opos = vertical ? o.y : o.x;
        if (increasing ? opos > pos : opos < pos) clip(pos, opos);
      }
    }
  }
  if (dist == std::numeric_limits<std::int64_t>::max())
    throw std::runtime_error("tilt world is unbounded in the force direction");
  return dist;
}

int TiltWorld::bond_pass() {
  // Union assemblies that ended the step 4-adjacent.
  const std::size_t n = assemblies_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::unordered_map<Cell2, std::size_t> occ;
  for (std::size_t i = 0; i < n; ++i)
    for (Cell2 c : assemblies_[i].cells) occ.emplace(c, i);

  int merges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (Cell2 c : assemblies_[i].cells) {
      for (Direction2 d : kAllDirections2) {
        auto it = occ.find(c + unit(d));
        if (it == occ.end() || it->second == i) continue;
        std::size_t ra = find(i), rb = find(it->second);
        if (ra != rb) {
          parent[std::max(ra, rb)] = std::min(ra, rb);
          ++merges;
        }
      }
    }
  }
  if (merges == 0) return 0;

  std::unordered_map<std::size_t, Assembly> grouped;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    Assembly& g = grouped[root];
    if (g.cells.empty())
      g.id = assemblies_[i].id;
    else
      g.id = std::min(g.id, assemblies_[i].id);
    g.cells.insert(g.cells.end(), assemblies_[i].cells.begin(), assemblies_[i].cells.end());
  }
  std::vector<Assembly> merged;
  merged.reserve(grouped.size());
  for (auto& [root, a] : grouped) {
    std::sort(a.cells.begin(), a.cells.end());
    merged.push_back(std::move(a));
  }
  std::sort(merged.begin(), merged.end(),
            [](const Assembly& a, const Assembly& b) { return a.id < b.id; });
  assemblies_ = std::move(merged);
  return merges;
}

SettleStats TiltWorld::settle(Direction2 force) {
  std::vector<std::size_t> order(assemblies_.size());
  std::iota(order.begin(), order.end(), 0);
  return settle_with_order(force, order);
}

SettleStats TiltWorld::settle_with_order(Direction2 force,
                                         const std::vector<std::size_t>& order) {
  SettleStats stats;
  std::unordered_set<std::uint64_t> moved_ids;
  const Cell2 step = unit(force);
  bool progress = true;
  int passes = 0;
  while (progress) {
    progress = false;
    if (++passes > 100000) throw std::logic_error("settle did not reach a fixed point");
    for (std::size_t idx : order) {
      if (idx >= assemblies_.size()) continue;
      Assembly& a = assemblies_[idx];
      const std::int64_t k = slide_distance(a, force);
      if (k <= 0) continue;
      const Cell2 delta{static_cast<std::int32_t>(step.x * k),
                        static_cast<std::int32_t>(step.y * k)};
      for (Cell2& c : a.cells) c = c + delta;
      moved_ids.insert(a.id);
      progress = true;
    }
  }
  stats.moved_assemblies = static_cast<int>(moved_ids.size());
  stats.merges = bond_pass();
  return stats;
}

std::string TiltWorld::render_frame() const {
  Cell2 lo{std::numeric_limits<std::int32_t>::max(), std::numeric_limits<std::int32_t>::max()};
  Cell2 hi{std::numeric_limits<std::int32_t>::min(), std::numeric_limits<std::int32_t>::min()};
  auto stretch = [&](Cell2 c) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
    hi.x = std::max(hi.x, c.x);
    hi.y = std::max(hi.y, c.y);
  };
  for (Cell2 c : walls_) stretch(c);
  for (const Assembly& a : assemblies_)
    for (Cell2 c : a.cells) stretch(c);
  if (lo.x > hi.x) return "";
  std::vector<std::string> rows(hi.y - lo.y + 1, std::string(hi.x - lo.x + 1, '.'));
  auto put = [&](Cell2 c, char ch) { rows[hi.y - c.y][c.x - lo.x] = ch; };
  for (Cell2 c : walls_) put(c, '#');
  for (const Assembly& a : assemblies_)
    for (Cell2 c : a.cells) put(c, static_cast<char>('a' + (a.id % 26)));
  std::ostringstream out;
  for (const std::string& r : rows) out << r << '\n';
  return out.str();
}

}  // namespace tilt
