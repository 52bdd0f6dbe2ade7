#include "tilt/cube3d.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace tilt {

namespace {

// Decomposes a direction into (axis, sign): axis 0 = x, 1 = y, 2 = z.
struct Axis3 {
  int axis;
  int sign;  // +1 when the tile arrives from the positive side
};

Axis3 axis_of(Direction3 d) {
  switch (d) {
    case Direction3::up: return {2, 1};
    case Direction3::down: return {2, -1};
    case Direction3::north: return {1, 1};
    case Direction3::south: return {1, -1};
    case Direction3::east: return {0, 1};
    case Direction3::west: return {0, -1};
  }
  return {2, 1};
}

std::int32_t coord(Cell3 c, int axis) {
  return axis == 0 ? c.x : (axis == 1 ? c.y : c.z);
}

// The two lateral axes of a travel axis, in lane-encoding order.
std::pair<int, int> lateral_axes(int axis) {
  if (axis == 2) return {0, 1};  // up/down lanes are (x, y)
  if (axis == 1) return {0, 2};  // north/south lanes are (x, z)
  return {1, 2};                 // east/west lanes are (y, z)
}

}  // namespace

bool blocked_3d(const std::vector<Cell3>& cells, Cell3 cell, Direction3 d) {
  const Axis3 ax = axis_of(d);
  const auto [la, lb] = lateral_axes(ax.axis);
  const std::int32_t pos = coord(cell, ax.axis);
  const std::int32_t a = coord(cell, la);
  const std::int32_t b = coord(cell, lb);
  for (Cell3 q : cells) {
    if (q == cell) continue;
    const std::int32_t qa = coord(q, la), qb = coord(q, lb);
    if (std::abs(qa - a) + std::abs(qb - b) > 1) continue;
    const std::int32_t qp = coord(q, ax.axis);
    if (ax.sign > 0 ? qp > pos : qp < pos) return true;
  }
  return false;
}

bool blocked_3d(const Polycube& p, Cell3 cell, Direction3 d) {
  return blocked_3d(p.cells(), cell, d);
}

std::optional<Cell3> landing_cell_3d(const std::vector<Cell3>& cells, ConstructionStep3 s) {
  const Axis3 ax = axis_of(s.direction);
  const auto [la, lb] = lateral_axes(ax.axis);
  std::optional<std::int32_t> best;
  for (Cell3 q : cells) {
    const std::int32_t da = std::abs(coord(q, la) - s.a);
    const std::int32_t db = std::abs(coord(q, lb) - s.b);
    if (da + db > 1) continue;
    std::int32_t candidate = coord(q, ax.axis);
    if (da + db == 0) candidate += ax.sign;
    if (!best || (ax.sign > 0 ? candidate > *best : candidate < *best)) best = candidate;
  }
  if (!best) return std::nullopt;
  Cell3 out;
  auto set = [&](int axis, std::int32_t v) {
    if (axis == 0)
      out.x = v;
    else if (axis == 1)
      out.y = v;
    else
      out.z = v;
  };
  set(ax.axis, *best);
  set(la, s.a);
  set(lb, s.b);
  return out;
}

namespace {

ConstructionStep3 step_for(Cell3 t, Direction3 d) {
  const Axis3 ax = axis_of(d);
  const auto [la, lb] = lateral_axes(ax.axis);
  return {d, coord(t, la), coord(t, lb)};
}

struct ExactSearch3 {
  struct Move {
    Cell3 cell;
    Direction3 dir;
  };

  static std::size_t memo_cap() {
    static const std::size_t cap = [] {
      if (const char* env = std::getenv("TILT_MEMO_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
      }
      return static_cast<std::size_t>(1) << 22;
    }();
    return cap;
  }

  // Memo keyed by canonical cells plus the direction set.
  static std::unordered_map<std::string, std::optional<Move>>& memo() {
    static std::unordered_map<std::string, std::optional<Move>> m;
    return m;
  }

  DirectionSet3 dirs;
  std::uint64_t explored = 0;

  std::string key_of(const std::vector<Cell3>& sorted_cells) const {
    Cell3 lo = sorted_cells.front();
    for (Cell3 c : sorted_cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
      lo.z = std::min(lo.z, c.z);
    }
    std::string key;
    key.reserve(sorted_cells.size() * 3 + 1);
    key.push_back(static_cast<char>(dirs.mask));
    for (Cell3 c : sorted_cells) {
      key.push_back(static_cast<char>(c.x - lo.x));
      key.push_back(static_cast<char>(c.y - lo.y));
      key.push_back(static_cast<char>(c.z - lo.z));
    }
    return key;
  }

  static bool connected_without(const std::vector<Cell3>& cells, Cell3 skip) {
    if (cells.size() <= 2) return true;
    std::unordered_set<Cell3> pending(cells.begin(), cells.end());
    pending.erase(skip);
    std::vector<Cell3> stack{*pending.begin()};
    pending.erase(pending.begin());
    while (!stack.empty()) {
      Cell3 c = stack.back();
      stack.pop_back();
      for (Direction3 d : kAllDirections3) {
        auto it = pending.find(c + unit(d));
        if (it != pending.end()) {
          stack.push_back(*it);
          pending.erase(it);
        }
      }
    }
    return pending.empty();
  }

  std::optional<Direction3> first_escape(const std::vector<Cell3>& cells, Cell3 t) const {
    for (Direction3 d : kAllDirections3) {
      if (!dirs.contains(d)) continue;
      if (!blocked_3d(cells, t, d)) return d;
    }
    return std::nullopt;
  }

  bool search(std::vector<Cell3>& cells) {
    if (cells.size() == 1) return true;
    const std::string key = key_of(cells);
    auto& m = memo();
    if (auto it = m.find(key); it != m.end()) return it->second.has_value();
    ++explored;
    Cell3 lo = cells.front();
    for (Cell3 c : cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
      lo.z = std::min(lo.z, c.z);
    }
    for (Cell3 t : cells) {
      if (!connected_without(cells, t)) continue;
      auto escape = first_escape(cells, t);
      if (!escape) continue;
      std::vector<Cell3> rest;
      rest.reserve(cells.size() - 1);
      for (Cell3 c : cells)
        if (!(c == t)) rest.push_back(c);
      if (search(rest)) {
        if (m.size() < memo_cap()) m.emplace(key, Move{t - lo, *escape});
        return true;
      }
    }
    if (m.size() < memo_cap()) m.emplace(key, std::nullopt);
    return false;
  }

  std::vector<std::pair<Cell3, Direction3>> reconstruct(std::vector<Cell3> cells) {
    std::vector<std::pair<Cell3, Direction3>> removals;
    while (cells.size() > 1) {
      const std::string key = key_of(cells);
      Cell3 lo = cells.front();
      for (Cell3 c : cells) {
        lo.x = std::min(lo.x, c.x);
        lo.y = std::min(lo.y, c.y);
        lo.z = std::min(lo.z, c.z);
      }
      std::optional<Move> move;
      auto it = memo().find(key);
      if (it != memo().end() && it->second) {
        move = it->second;
      } else {
        for (Cell3 t : cells) {
          if (!connected_without(cells, t)) continue;
          auto escape = first_escape(cells, t);
          if (!escape) continue;
          std::vector<Cell3> rest;
          for (Cell3 c : cells)
            if (!(c == t)) rest.push_back(c);
          if (search(rest)) {
            move = Move{t - lo, *escape};
            break;
          }
        }
      }
      if (!move) throw std::logic_error("exact 3d search: lost witness state");
      const Cell3 t = move->cell + lo;
      removals.emplace_back(t, move->dir);
      cells.erase(std::find(cells.begin(), cells.end(), t));
    }
    return removals;
  }
};

}  // namespace

DecisionResult3 decide_polycube(const Polycube& p, DirectionSet3 dirs, std::size_t limit) {
  if (dirs.empty()) throw std::invalid_argument("direction set must be nonempty");
  DecisionResult3 r;
  if (p.size() > limit) {
    r.status = DecisionStatus::resource_limit;
    r.reason = "instance larger than the exact-search limit";
    return r;
  }
  ExactSearch3 search{dirs};
  std::vector<Cell3> cells = p.cells();
  const bool ok = search.search(cells);
  r.explored_states = search.explored;
  if (!ok) {
    r.status = DecisionStatus::not_constructible;
    r.reason = "explored " + std::to_string(search.explored) + " states";
    return r;
  }
  r.status = DecisionStatus::constructible;
  auto removals = search.reconstruct(p.cells());
  std::vector<Cell3> rest = p.cells();
  for (auto& [t, d] : removals)
    rest.erase(std::find(rest.begin(), rest.end(), t));
  ConstructionSequence3 seq;
  seq.seed = rest.front();
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    seq.steps.push_back(step_for(it->first, it->second));
  r.sequence = std::move(seq);
  return r;
}

PathResult3 constructible_path_3d(const Polycube& p, Cell3 s, Cell3 t,
                                  std::uint64_t node_budget, DirectionSet3 dirs) {
  if (!p.contains(s) || !p.contains(t))
    throw std::invalid_argument("path endpoints must lie in the polycube");
  PathResult3 result;
  result.status = DecisionStatus::not_constructible;

  std::vector<Cell3> path{s};
  std::unordered_set<Cell3> on_path{s};
  std::uint64_t budget = node_budget;
  bool out_of_budget = false;

  auto insertable = [&](Cell3 c) {
    for (Direction3 d : kAllDirections3)
      if (dirs.contains(d) && !blocked_3d(path, c, d)) return true;
    return false;
  };

  auto dfs = [&](auto&& self, Cell3 cur) -> bool {
    if (cur == t) {
      result.path = CubePath{path};
      return true;
    }
    if (budget == 0) {
      out_of_budget = true;
      return false;
    }
    --budget;
    ++result.explored_states;
    for (Direction3 nd : kAllDirections3) {
      const Cell3 nb = cur + unit(nd);
      if (!p.contains(nb) || on_path.count(nb)) continue;
      if (!insertable(nb)) continue;  // prefix-order prune
      path.push_back(nb);
      on_path.insert(nb);
      if (self(self, nb)) return true;
      on_path.erase(nb);
      path.pop_back();
    }
    return false;
  };

  if (dfs(dfs, s)) {
    result.status = DecisionStatus::constructible;
  } else if (out_of_budget) {
    result.status = DecisionStatus::resource_limit;
  }
  return result;
}

Polycube flat_embedding(const Polyomino& p) {
  std::vector<Cell3> cells;
  cells.reserve(p.size());
  for (Cell2 c : p.cells()) cells.push_back({c.x, c.y, 0});
  std::sort(cells.begin(), cells.end());
  return Polycube::unchecked(std::move(cells));
}

ConstructionSequence3 lift_sequence(const ConstructionSequence& seq) {
  ConstructionSequence3 out;
  out.seed = {seq.seed.x, seq.seed.y, 0};
  for (const ConstructionStep& s : seq.steps) {
    Direction3 d;
    switch (s.direction) {
      case Direction2::north: d = Direction3::north; break;
      case Direction2::east: d = Direction3::east; break;
      case Direction2::south: d = Direction3::south; break;
      case Direction2::west: d = Direction3::west; break;
    }
    // Lateral lane lines at z = 0: (x, z) or (y, z).
    out.steps.push_back({d, s.lane, 0});
  }
  return out;
}

std::optional<Polycube> replay_3d(const ConstructionSequence3& seq) {
  std::vector<Cell3> cells{seq.seed};
  for (const ConstructionStep3& s : seq.steps) {
    auto cell = landing_cell_3d(cells, s);
    if (!cell) return std::nullopt;
    cells.push_back(*cell);
  }
  std::sort(cells.begin(), cells.end());
  return Polycube::unchecked(std::move(cells));
}

}  // namespace tilt
