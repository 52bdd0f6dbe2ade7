#include "tilt/maze.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tilt/ascii_io.hpp"
#include "tilt/blocking_index.hpp"

namespace tilt {

namespace {

// Prefix shapes and landing cells of a verified sequence.
struct Replay {
  std::vector<Cell2> landings;              // landings[i] = cell added by step i
  std::vector<std::vector<Cell2>> prefixes; // prefixes[i] = cells before step i (sorted)
  Polyomino final_shape() const {
    std::vector<Cell2> cells = prefixes.back();
    cells.push_back(landings.back());
    std::sort(cells.begin(), cells.end());
    return Polyomino::unchecked(std::move(cells));
  }
};

Replay replay_sequence(const ConstructionSequence& seq) {
  Replay r;
  BlockingIndex ix;
  ix.insert(seq.seed);
  std::vector<Cell2> cells{seq.seed};
  for (const ConstructionStep& st : seq.steps) {
    auto cell = ix.landing(st.direction, st.lane);
    if (!cell) throw std::invalid_argument("sequence does not verify (no-op step)");
    std::vector<Cell2> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    r.prefixes.push_back(std::move(sorted));
    r.landings.push_back(*cell);
    ix.insert(*cell);
    cells.push_back(*cell);
  }
  if (r.landings.empty()) {
    r.prefixes.push_back({seq.seed});
  }
  return r;
}

// A feed flight carries the tile toward an occupied neighbor (frontal stop).
// The same lane strictly behind the attachment cell must hold no prefix tile,
// or the incoming tile would stop early. Lateral prefix tiles do not matter:
// a sliding particle passes them.
std::optional<Direction2> feed_flight(const std::vector<Cell2>& prefix_sorted, Cell2 t,
                                      std::optional<Direction2> preferred) {
  auto contains = [&](Cell2 c) {
    return std::binary_search(prefix_sorted.begin(), prefix_sorted.end(), c);
  };
  auto valid = [&](Direction2 f) {
    if (!contains(t + unit(f))) return false;
    for (Cell2 q : prefix_sorted) {
      const bool vertical = is_vertical(f);
      if (vertical ? q.x != t.x : q.y != t.y) continue;
      const std::int32_t qp = vertical ? q.y : q.x;
      const std::int32_t tp = vertical ? t.y : t.x;
      const bool increasing = (f == Direction2::north || f == Direction2::east);
      if (increasing ? qp < tp : qp > tp) return false;
    }
    return true;
  };
  if (preferred && valid(*preferred)) return preferred;
  for (Direction2 f : kAllDirections2)
    if (valid(f)) return f;
  return std::nullopt;
}

Cell2 corner_of(std::int64_t leg, std::int32_t pitch) {
  // Rest cell of a 1x1 assembly at the start of `leg` in the clockwise
  // outward spiral with the given pitch.
  if (leg == 0) return {0, 0};
  const std::int64_t w = (leg - 1) / 4;  // winding of the previous leg group
  const std::int32_t r = static_cast<std::int32_t>((w + 1)) * pitch;
  switch ((leg - 1) % 4) {
    case 0: return {1 - r, corner_of(leg - 1, pitch).y};  // after a west leg
    case 1: return {corner_of(leg - 1, pitch).x, r - 1};  // after a north leg
    case 2: return {r - 1, corner_of(leg - 1, pitch).y};  // after an east leg
    default: return {corner_of(leg - 1, pitch).x, 1 - r}; // after a south leg
  }
}

}  // namespace

MazeLayout generate_maze(const ConstructionSequence& seq, std::int64_t copies) {
  if (copies < 1) throw std::invalid_argument("copies must be positive");
  Replay rep = replay_sequence(seq);
  const Polyomino product =
      rep.landings.empty() ? Polyomino::unchecked(rep.prefixes.front()) : rep.final_shape();
  const std::size_t n_steps = rep.landings.size();

  // Flights and movement-slot mapping (one slot per spiral leg).
  std::vector<Direction2> flights(n_steps);
  std::vector<std::int64_t> slots(n_steps);
  const std::array<Direction2, 4> cycle{Direction2::west, Direction2::north,
                                        Direction2::east, Direction2::south};
  std::int64_t prev_slot = -1;
  for (std::size_t i = 0; i < n_steps; ++i) {
    auto flight = feed_flight(rep.prefixes[i], rep.landings[i],
                              opposite(seq.steps[i].direction));
    if (!flight)
      throw std::invalid_argument("step " + std::to_string(i) +
                                  " admits no straight frontal feed");
    flights[i] = *flight;
    std::int64_t j = prev_slot + 1;
    while (cycle[j % 4] != *flight) ++j;
    slots[i] = j;
    prev_slot = j;
  }
  const std::int64_t last_slot = n_steps == 0 ? -1 : slots.back();

  const Cell2 plo = product.min_corner();
  const Cell2 phi = product.max_corner();
  const std::int32_t bbox_w = phi.x - plo.x + 1;
  const std::int32_t bbox_h = phi.y - plo.y + 1;
  const std::int32_t K = bbox_w + bbox_h + 2;  // corridor width
  const std::int32_t pitch = K + 2;

  std::int64_t legs = last_slot + 4 * copies + 12;
  legs = ((legs + 3) / 4) * 4;
  const std::int64_t windings = legs / 4;

  std::vector<Cell2> corners(static_cast<std::size_t>(legs) + 1);
  for (std::int64_t j = 0; j <= legs; ++j)
    corners[static_cast<std::size_t>(j)] = corner_of(j, pitch);

  std::unordered_set<Cell2> open;
  auto carve_rect = [&](std::int32_t x0, std::int32_t x1, std::int32_t y0, std::int32_t y1) {
    for (std::int32_t x = x0; x <= x1; ++x)
      for (std::int32_t y = y0; y <= y1; ++y) open.insert({x, y});
  };
  for (std::int64_t j = 0; j < legs; ++j) {
    const Cell2 a = corners[static_cast<std::size_t>(j)];
    const Cell2 b = corners[static_cast<std::size_t>(j) + 1];
    switch (j % 4) {
      case 0: carve_rect(b.x, a.x, a.y, a.y + K - 1); break;            // west
      case 1: carve_rect(a.x, a.x + K - 1, a.y, b.y); break;            // north
      case 2: carve_rect(a.x, b.x, a.y - K + 1, a.y); break;            // east
      default: carve_rect(a.x - K + 1, a.x, b.y, a.y); break;           // south
    }
  }

  const std::int32_t depot_ring = static_cast<std::int32_t>(windings) * pitch + 2;
  const std::int32_t frame = depot_ring + 1;

  std::vector<MazeDepot> depots;
  auto carve_lane_x = [&](std::int32_t x0, std::int32_t x1, std::int32_t y) {
    for (std::int32_t x = x0; x <= x1; ++x) open.insert({x, y});
  };
  auto carve_lane_y = [&](std::int32_t y0, std::int32_t y1, std::int32_t x) {
    for (std::int32_t y = y0; y <= y1; ++y) open.insert({x, y});
  };

  // Seed depot: tiles drop south along the spiral core column.
  carve_lane_y(corners[0].y + 1, depot_ring, corners[0].x);
  depots.push_back({{corners[0].x, depot_ring}, Direction2::south, 3, 4, copies});

  // Rest-offset replay: track the translation of the traveling assembly at
  // the end of every leg, growing it at its feed legs.
  std::vector<Cell2> q = {seq.seed};
  auto extreme = [&](bool take_x, bool take_max) {
    std::int32_t best = take_x ? q.front().x : q.front().y;
    for (Cell2 c : q) {
      const std::int32_t v = take_x ? c.x : c.y;
      best = take_max ? std::max(best, v) : std::min(best, v);
    }
    return best;
  };
  Cell2 offset = corners[0] - seq.seed;
  std::size_t next_step = 0;
  const std::int64_t feed_legs = last_slot + 1;
  for (std::int64_t j = 0; j < feed_legs; ++j) {
    const Cell2 end = corners[static_cast<std::size_t>(j) + 1];
    switch (j % 4) {
      case 0: offset.x = end.x - extreme(true, false); break;   // west: min x at corner
      case 1: offset.y = end.y - extreme(false, true); break;   // north: max y
      case 2: offset.x = end.x - extreme(true, true); break;    // east: max x
      default: offset.y = end.y - extreme(false, false); break; // south: min y
    }
    if (next_step < n_steps && slots[next_step] == j) {
      const Cell2 attach = rep.landings[next_step] + offset;
      switch (flights[next_step]) {
        case Direction2::east:
          carve_lane_x(-depot_ring, attach.x - 1, attach.y);
          depots.push_back({{-depot_ring, attach.y}, Direction2::east,
                            4 + slots[next_step], 4, copies});
          break;
        case Direction2::west:
          carve_lane_x(attach.x + 1, depot_ring, attach.y);
          depots.push_back({{depot_ring, attach.y}, Direction2::west,
                            4 + slots[next_step], 4, copies});
          break;
        case Direction2::north:
          carve_lane_y(-depot_ring, attach.y - 1, attach.x);
          depots.push_back({{attach.x, -depot_ring}, Direction2::north,
                            4 + slots[next_step], 4, copies});
          break;
        case Direction2::south:
          carve_lane_y(attach.y + 1, depot_ring, attach.x);
          depots.push_back({{attach.x, depot_ring}, Direction2::south,
                            4 + slots[next_step], 4, copies});
          break;
      }
      q.push_back(rep.landings[next_step]);
      ++next_step;
    }
  }

  MazeLayout layout{.walls = {},
                    .depots = std::move(depots),
                    .schedule = cycle,
                    .product = canonicalize(product),
                    .copies = copies,
                    .last_feed_slot = last_slot,
                    .total_legs = legs};
  layout.walls.reserve(static_cast<std::size_t>(frame) * frame / 2);
  for (std::int32_t x = -frame; x <= frame; ++x)
    for (std::int32_t y = -frame; y <= frame; ++y)
      if (!open.count({x, y})) layout.walls.push_back({x, y});

  // Normalize the frame so files and simulations use nonnegative coordinates.
  const Cell2 shift{frame, frame};
  for (Cell2& w : layout.walls) w = w + shift;
  for (MazeDepot& d : layout.depots) d.cell = d.cell + shift;
  return layout;
}

namespace {

// Exact search restricted to feedable insertions, memoized separately from
// the plain decider.
struct PipelineSearch {
  struct Move {
    Cell2 cell;
    Direction2 dir;
  };

  static std::unordered_map<std::string, std::optional<Move>>& memo() {
    static std::unordered_map<std::string, std::optional<Move>> m;
    return m;
  }

  static std::string key_of(const std::vector<Cell2>& sorted_cells) {
    Cell2 lo = sorted_cells.front();
    for (Cell2 c : sorted_cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
    }
    std::string key;
    key.reserve(sorted_cells.size() * 2);
    for (Cell2 c : sorted_cells) {
      key.push_back(static_cast<char>(c.x - lo.x));
      key.push_back(static_cast<char>(c.y - lo.y));
    }
    return key;
  }

  static bool connected_without(const std::vector<Cell2>& cells, Cell2 skip) {
    if (cells.size() <= 2) return true;
    std::unordered_set<Cell2> pending(cells.begin(), cells.end());
    pending.erase(skip);
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
    return pending.empty();
  }

  static std::optional<Direction2> tap_escape(const std::vector<Cell2>& cells, Cell2 t) {
    for (Direction2 d : kAllDirections2) {
      const bool vertical = is_vertical(d);
      const bool greater = (d == Direction2::north || d == Direction2::east);
      bool blocked = false;
      for (Cell2 q : cells) {
        if (q == t) continue;
        const std::int32_t lane_q = vertical ? q.x : q.y;
        const std::int32_t lane_t = vertical ? t.x : t.y;
        if (std::abs(lane_q - lane_t) > 1) continue;
        const std::int32_t pos_q = vertical ? q.y : q.x;
        const std::int32_t pos_t = vertical ? t.y : t.x;
        if (greater ? pos_q > pos_t : pos_q < pos_t) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return d;
    }
    return std::nullopt;
  }

  bool search(std::vector<Cell2>& cells) {
    if (cells.size() == 1) return true;
    const std::string key = key_of(cells);
    auto& m = memo();
    if (auto it = m.find(key); it != m.end()) return it->second.has_value();
    Cell2 lo = cells.front();
    for (Cell2 c : cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
    }
    for (Cell2 t : cells) {
      if (!connected_without(cells, t)) continue;
      auto escape = tap_escape(cells, t);
      if (!escape) continue;
      std::vector<Cell2> rest;
      rest.reserve(cells.size() - 1);
      for (Cell2 c : cells)
        if (!(c == t)) rest.push_back(c);
      if (!feed_flight(rest, t, opposite(*escape))) continue;
      if (search(rest)) {
        m.emplace(key, Move{t - lo, *escape});
        return true;
      }
    }
    m.emplace(key, std::nullopt);
    return false;
  }

  std::vector<std::pair<Cell2, Direction2>> reconstruct(std::vector<Cell2> cells) {
    std::vector<std::pair<Cell2, Direction2>> removals;
    while (cells.size() > 1) {
      Cell2 lo = cells.front();
      for (Cell2 c : cells) {
        lo.x = std::min(lo.x, c.x);
        lo.y = std::min(lo.y, c.y);
      }
      auto it = memo().find(key_of(cells));
      if (it == memo().end() || !it->second)
        throw std::logic_error("pipeline search: lost witness state");
      const Cell2 t = it->second->cell + lo;
      removals.emplace_back(t, it->second->dir);
      cells.erase(std::find(cells.begin(), cells.end(), t));
    }
    return removals;
  }
};

bool sequence_is_feedable(const ConstructionSequence& seq) {
  try {
    Replay rep = replay_sequence(seq);
    for (std::size_t i = 0; i < rep.landings.size(); ++i)
      if (!feed_flight(rep.prefixes[i], rep.landings[i],
                       opposite(seq.steps[i].direction)))
        return false;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::optional<ConstructionSequence> find_pipeline_sequence(const Polyomino& p,
                                                           std::size_t exact_limit) {
  if (is_simple(p)) {
    DecisionResult r = decide_simple(p);
    if (!r.ok()) return std::nullopt;
    if (sequence_is_feedable(*r.sequence)) return r.sequence;
  }
  if (p.size() > exact_limit)
    throw resource_limit_error("pipeline sequence search limit exceeded");
  PipelineSearch search;
  std::vector<Cell2> cells = p.cells();
  if (!search.search(cells)) return std::nullopt;
  auto removals = search.reconstruct(p.cells());
  std::vector<Cell2> rest = p.cells();
  for (auto& [t, d] : removals)
    rest.erase(std::find(rest.begin(), rest.end(), t));
  ConstructionSequence seq;
  seq.seed = rest.front();
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    seq.steps.push_back({it->second, lane_coordinate(it->first, it->second)});
  return seq;
}

PipelineReport run_pipeline(const MazeLayout& layout, std::int64_t copies,
                            std::int64_t step_budget, bool want_trace,
                            std::ostream* frames) {
  PipelineReport report;
  if (copies < 1) throw std::invalid_argument("copies must be positive");
  if (copies > layout.copies) {
    report.failure = "layout was generated for fewer copies";
    return report;
  }
  const std::size_t product_size = layout.product.size();
  if (step_budget < 0)
    step_budget = 4 * (layout.last_feed_slot + 5) + 16 * copies + 64;

  TiltWorld world(layout.walls);
  std::vector<std::int64_t> released(layout.depots.size(), 0);
  std::unordered_map<std::uint64_t, std::int64_t> copy_of_seed;
  std::vector<char> complete(static_cast<std::size_t>(copies), 0);
  std::vector<char> exited(static_cast<std::size_t>(copies), 0);
  report.completion_steps.assign(static_cast<std::size_t>(copies), -1);
  std::int64_t next_copy = 0;

  auto note = [&](std::string line) {
    if (want_trace) report.trace.push_back(std::move(line));
  };

  for (std::int64_t s = 0; s < step_budget && report.copies_exited < copies; ++s) {
    const Direction2 dir = layout.schedule[static_cast<std::size_t>(s % 4)];
    for (std::size_t di = 0; di < layout.depots.size(); ++di) {
      const MazeDepot& depot = layout.depots[di];
      if (s < depot.first_step || (s - depot.first_step) % depot.period != 0) continue;
      if (released[di] >= std::min<std::int64_t>(depot.capacity, copies)) continue;
      if (world.is_wall(depot.cell) || world.is_occupied(depot.cell)) continue;
      const std::uint64_t id = world.add_assembly({depot.cell});
      ++released[di];
      if (di == 0 && next_copy < copies) copy_of_seed[id] = next_copy++;
      note("step " + std::to_string(s) + " emit depot " + std::to_string(di));
    }

    const SettleStats stats = world.settle(dir);
    report.steps_run = s + 1;
    note("step " + std::to_string(s) + " dir " + std::string(1, to_char(dir)) +
         " moved " + std::to_string(stats.moved_assemblies) + " merges " +
         std::to_string(stats.merges));
    if (frames)
      *frames << "step " << s << " dir " << to_char(dir) << "\n"
              << world.render_frame() << "\n";

    for (const Assembly& a : world.assemblies()) {
      if (a.cells.size() < product_size) continue;
      if (a.cells.size() > product_size) {
        report.failure = "step " + std::to_string(s) + ": assembly grew past the product";
        return report;
      }
      auto it = copy_of_seed.find(a.id);
      if (it == copy_of_seed.end()) continue;
      const std::int64_t k = it->second;
      if (complete[static_cast<std::size_t>(k)]) continue;
      if (!(canonicalize(Polyomino::unchecked(a.cells)) == layout.product)) {
        report.failure = "step " + std::to_string(s) + ": copy " + std::to_string(k) +
                         " is not congruent to the product";
        return report;
      }
      complete[static_cast<std::size_t>(k)] = 1;
      report.completion_steps[static_cast<std::size_t>(k)] = s;
      ++report.copies_completed;
      if (!report.first_copy_step) report.first_copy_step = s;
      note("step " + std::to_string(s) + " copy " + std::to_string(k) + " complete");
    }

    for (std::int64_t k = 0; k < copies; ++k) {
      if (!complete[static_cast<std::size_t>(k)] || exited[static_cast<std::size_t>(k)])
        continue;
      if (s >= 4 * k + 4 + layout.last_feed_slot + 5) {
        exited[static_cast<std::size_t>(k)] = 1;
        ++report.copies_exited;
        note("step " + std::to_string(s) + " copy " + std::to_string(k) + " exits");
      }
    }
  }

  report.success = report.copies_exited >= copies;
  if (!report.success && report.failure.empty()) report.failure = "step budget exhausted";
  return report;
}

std::string render_maze_grid(const MazeLayout& layout) {
  Cell2 lo = layout.walls.front(), hi = lo;
  for (Cell2 c : layout.walls) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
    hi.x = std::max(hi.x, c.x);
    hi.y = std::max(hi.y, c.y);
  }
  std::vector<std::string> rows(hi.y - lo.y + 1, std::string(hi.x - lo.x + 1, '.'));
  for (Cell2 c : layout.walls) rows[hi.y - c.y][c.x - lo.x] = '#';
  for (const MazeDepot& d : layout.depots) rows[hi.y - d.cell.y][d.cell.x - lo.x] = 'D';
  std::string out;
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

std::string render_schedule(const MazeLayout& layout) {
  std::ostringstream out;
  out << "# tilt factory schedule\n";
  out << "cycle";
  for (Direction2 d : layout.schedule) out << ' ' << to_char(d);
  out << '\n';
  out << "legs " << layout.total_legs << '\n';
  out << "last_feed_slot " << layout.last_feed_slot << '\n';
  out << "copies " << layout.copies << '\n';
  for (std::size_t i = 0; i < layout.depots.size(); ++i) {
    const MazeDepot& d = layout.depots[i];
    out << "depot " << i << ' ' << d.cell.x << ' ' << d.cell.y << ' ' << to_char(d.flight)
        << ' ' << d.first_step << ' ' << d.period << ' ' << d.capacity << '\n';
  }
  out << "product\n" << render_ascii(layout.product) << "end\n";
  return out.str();
}

MazeLayout parse_maze(const std::string& grid_text, const std::string& schedule_text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(grid_text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw parse_error("maze grid is empty");
  MazeLayout layout{.walls = {},
                    .depots = {},
                    .schedule = {Direction2::west, Direction2::north, Direction2::east,
                                 Direction2::south},
                    .product = Polyomino::unchecked({{0, 0}}),
                    .copies = 0,
                    .last_feed_slot = -1,
                    .total_legs = 0};
  std::unordered_set<Cell2> depot_cells;
  const std::int32_t rows = static_cast<std::int32_t>(lines.size());
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::size_t col = 0; col < lines[static_cast<std::size_t>(r)].size(); ++col) {
      const char ch = lines[static_cast<std::size_t>(r)][col];
      const Cell2 cell{static_cast<std::int32_t>(col), rows - 1 - r};
      if (ch == '#')
        layout.walls.push_back(cell);
      else if (ch == 'D')
        depot_cells.insert(cell);
      else if (ch != '.')
        throw parse_error(std::string("maze grid: unexpected character '") + ch + "'");
    }
  }

  std::istringstream in(schedule_text);
  std::string line;
  bool in_product = false;
  std::string product_text;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (in_product) {
      if (line == "end") {
        in_product = false;
        continue;
      }
      product_text += line;
      product_text += '\n';
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "cycle") {
      for (auto& d : layout.schedule) {
        std::string c;
        if (!(ls >> c) || c.size() != 1 || !direction2_from_char(c[0]))
          throw parse_error("schedule: malformed cycle line");
        d = *direction2_from_char(c[0]);
      }
    } else if (word == "legs") {
      ls >> layout.total_legs;
    } else if (word == "last_feed_slot") {
      ls >> layout.last_feed_slot;
    } else if (word == "copies") {
      ls >> layout.copies;
    } else if (word == "depot") {
      std::size_t idx;
      MazeDepot d;
      std::string f;
      if (!(ls >> idx >> d.cell.x >> d.cell.y >> f >> d.first_step >> d.period >>
            d.capacity) ||
          f.size() != 1)
        throw parse_error("schedule: malformed depot line");
      auto dir = direction2_from_char(f[0]);
      if (!dir) throw parse_error("schedule: bad depot flight direction");
      d.flight = *dir;
      if (idx != layout.depots.size())
        throw parse_error("schedule: depot indexes must be consecutive");
      if (!depot_cells.count(d.cell))
        throw parse_error("schedule: depot cell is not marked in the grid");
      layout.depots.push_back(d);
    } else if (word == "product") {
      in_product = true;
    } else {
      throw parse_error("schedule: unknown keyword '" + word + "'");
    }
  }
  if (product_text.empty()) throw parse_error("schedule: missing product section");
  layout.product = parse_polyomino(product_text);
  if (layout.depots.size() != depot_cells.size())
    throw parse_error("schedule: depot count does not match grid markers");
  return layout;
}

}  // namespace tilt
