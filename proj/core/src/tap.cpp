#include "tilt/tap.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tilt {

std::optional<Cell2> landing_cell(const Polyomino& p, ConstructionStep s) {
  const bool vertical = is_vertical(s.direction);
  const bool from_high = (s.direction == Direction2::north || s.direction == Direction2::east);
  std::optional<std::int32_t> best;
  for (Cell2 q : p.cells()) {
    const std::int32_t lane_q = vertical ? q.x : q.y;
    if (std::abs(lane_q - s.lane) > 1) continue;
    std::int32_t candidate = vertical ? q.y : q.x;
    if (lane_q == s.lane) candidate += from_high ? 1 : -1;
    if (!best || (from_high ? candidate > *best : candidate < *best)) best = candidate;
  }
  if (!best) return std::nullopt;
  return vertical ? Cell2{s.lane, *best} : Cell2{*best, s.lane};
}

std::optional<Polyomino> apply_step(const Polyomino& p, ConstructionStep s) {
  auto cell = landing_cell(p, s);
  if (!cell) return std::nullopt;
  std::vector<Cell2> cells = p.cells();
  cells.insert(std::upper_bound(cells.begin(), cells.end(), *cell), *cell);
  return Polyomino::unchecked(std::move(cells));
}

std::vector<Direction2> removal_directions(const Polyomino& p, Cell2 t) {
  if (!p.contains(t)) throw std::invalid_argument("tile not in polyomino");
  std::vector<Direction2> out;
  for (Direction2 d : kAllDirections2) {
    bool blocked = false;
    const bool vertical = is_vertical(d);
    const bool greater = (d == Direction2::north || d == Direction2::east);
    for (Cell2 q : p.cells()) {
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
    if (!blocked) out.push_back(d);
  }
  return out;
}

VerifyResult verify(const Polyomino& p, const ConstructionSequence& seq) {
  std::vector<Cell2> built{seq.seed};
  BlockingIndex index;
  index.insert(seq.seed);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    auto cell = index.landing(seq.steps[i].direction, seq.steps[i].lane);
    if (!cell) {
      VerifyResult r;
      r.failed_step = i;
      r.reason = "no-op step: lane misses the assembly";
      return r;
    }
    index.insert(*cell);
    built.push_back(*cell);
  }
  std::sort(built.begin(), built.end());
  Polyomino result = Polyomino::unchecked(std::move(built));
  VerifyResult r;
  r.built = result;
  if (result.size() != p.size()) {
    r.reason = "size mismatch";
    return r;
  }
  if (!(canonicalize(result) == canonicalize(p))) {
    r.reason = "shape mismatch";
    return r;
  }
  r.ok = true;
  return r;
}

namespace {

class GreedyDecider {
 public:
  GreedyDecider(const Polyomino& p, std::optional<Cell2> forced_seed)
      : forced_(forced_seed), index_(p) {
    live_.reserve(p.size() * 2);
    for (Cell2 c : p.cells()) live_.insert(c);
  }

  DecisionResult run(const Polyomino& p) {
    removals_.reserve(p.size());
    for (Cell2 c : p.cells()) enqueue_if_candidate(c);
    while (live_.size() > 1) {
      std::optional<Cell2> next = pop_candidate();
      if (!next) {
        DecisionResult r;
        r.status = DecisionStatus::not_constructible;
        r.reason = forced_ ? "no decomposition with the forced seed" : "greedy stalled";
        return r;
      }
      remove_tile(*next);
    }
    DecisionResult r;
    r.status = DecisionStatus::constructible;
    ConstructionSequence seq;
    seq.seed = *live_.begin();
    seq.steps.reserve(removals_.size());
    for (auto it = removals_.rbegin(); it != removals_.rend(); ++it)
      seq.steps.push_back({it->second, lane_coordinate(it->first, it->second)});
    r.sequence = std::move(seq);
    return r;
  }

 private:
  bool occupied(Cell2 c) const { return live_.count(c) != 0; }

  bool convex(Cell2 t) const {
    for (int dx : {-1, 1})
      for (int dy : {-1, 1})
        if (!occupied({t.x + dx, t.y}) && !occupied({t.x, t.y + dy}) &&
            !occupied({t.x + dx, t.y + dy}))
          return true;
    return false;
  }

  // Local cut rule; valid for convex tiles of a simple polyomino, which the
  // current shape always is (removals preserve simplicity).
  bool cut_local(Cell2 t) const {
    const bool n = occupied(t + Cell2{0, 1});
    const bool e = occupied(t + Cell2{1, 0});
    const bool s = occupied(t + Cell2{0, -1});
    const bool w = occupied(t + Cell2{-1, 0});
    if (int(n) + int(e) + int(s) + int(w) <= 1) return false;
    if (n && e) return !occupied(t + Cell2{1, 1});
    if (e && s) return !occupied(t + Cell2{1, -1});
    if (s && w) return !occupied(t + Cell2{-1, -1});
    if (w && n) return !occupied(t + Cell2{-1, 1});
    return true;  // opposite neighbors: unreachable for a convex tile
  }

  std::optional<Direction2> first_escape(Cell2 t) const {
    for (Direction2 d : kAllDirections2)
      if (!index_.is_blocked(t, d)) return d;
    return std::nullopt;
  }

  bool candidate(Cell2 t) const {
    if (forced_ && t == *forced_) return false;
    return convex(t) && !cut_local(t) && first_escape(t).has_value();
  }

  void enqueue_if_candidate(Cell2 t) {
    if (queued_.count(t) || !candidate(t)) return;
    queued_.insert(t);
    queue_.push_back(t);
  }

  std::optional<Cell2> pop_candidate() {
    while (!queue_.empty()) {
      Cell2 t = queue_.front();
      queue_.pop_front();
      queued_.erase(t);
      if (occupied(t) && candidate(t)) return t;  // drop stale entries
    }
    return std::nullopt;
  }

  void remove_tile(Cell2 t) {
    Direction2 d = *first_escape(t);
    index_.remove(t);
    live_.erase(t);
    removals_.emplace_back(t, d);
    for (Cell2 f : index_.frontier_after_removal(t))
      enqueue_if_candidate(f);
  }

  std::optional<Cell2> forced_;
  BlockingIndex index_;
  std::unordered_set<Cell2> live_;
  std::deque<Cell2> queue_;
  std::unordered_set<Cell2> queued_;
  std::vector<std::pair<Cell2, Direction2>> removals_;
};

}  // namespace

DecisionResult decide_simple(const Polyomino& p, std::optional<Cell2> forced_seed) {
  if (forced_seed && !p.contains(*forced_seed))
    throw std::invalid_argument("forced seed not in polyomino");
  if (!is_simple(p)) {
    DecisionResult r;
    r.status = DecisionStatus::not_supported;
    r.reason = "polyomino is not hole-free";
    return r;
  }
  GreedyDecider decider(p, forced_seed);
  return decider.run(p);
}

namespace {

// Memoized exact decomposition search. Keys are canonical cell sets packed
// into strings; the stored move (removed tile in canonical coordinates plus
// escape direction) lets a witness be reconstructed without re-searching.
struct ExactSearch {
  struct Move {
    Cell2 cell;
    Direction2 dir;
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

  static std::unordered_map<std::string, std::optional<Move>>& memo() {
    static std::unordered_map<std::string, std::optional<Move>> m;
    return m;
  }

  std::uint64_t explored = 0;

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

  static std::optional<Direction2> first_escape(const std::vector<Cell2>& cells, Cell2 t) {
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
    ++explored;
    Cell2 lo = cells.front();
    for (Cell2 c : cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell2 t = cells[i];
      if (!connected_without(cells, t)) continue;
      auto escape = first_escape(cells, t);
      if (!escape) continue;
      std::vector<Cell2> rest;
      rest.reserve(cells.size() - 1);
      for (Cell2 c : cells)
        if (!(c == t)) rest.push_back(c);
      if (search(rest)) {
        if (m.size() < memo_cap()) m.emplace(key, Move{t - lo, *escape});
        return true;
      }
    }
    if (m.size() < memo_cap()) m.emplace(key, std::nullopt);
    return false;
  }

  // Re-walks the memoized accept moves to emit the removal order.
  std::vector<std::pair<Cell2, Direction2>> reconstruct(std::vector<Cell2> cells) {
    std::vector<std::pair<Cell2, Direction2>> removals;
    while (cells.size() > 1) {
      const std::string key = key_of(cells);
      Cell2 lo = cells.front();
      for (Cell2 c : cells) {
        lo.x = std::min(lo.x, c.x);
        lo.y = std::min(lo.y, c.y);
      }
      std::optional<Move> move;
      auto it = memo().find(key);
      if (it != memo().end() && it->second) {
        move = it->second;
      } else {
        // Memo entry evicted by the cap: redo one level of the search.
        for (Cell2 t : cells) {
          if (!connected_without(cells, t)) continue;
          auto escape = first_escape(cells, t);
          if (!escape) continue;
          std::vector<Cell2> rest;
          for (Cell2 c : cells)
            if (!(c == t)) rest.push_back(c);
          if (search(rest)) {
            move = Move{t - lo, *escape};
            break;
          }
        }
      }
      if (!move) throw std::logic_error("exact search: lost witness state");
      const Cell2 t = move->cell + lo;
      removals.emplace_back(t, move->dir);
      cells.erase(std::find(cells.begin(), cells.end(), t));
    }
    return removals;
  }
};

}  // namespace

DecisionResult decide_exact(const Polyomino& p, std::size_t limit) {
  DecisionResult r;
  if (p.size() > limit) {
    r.status = DecisionStatus::resource_limit;
    r.reason = "instance larger than the exact-search limit";
    return r;
  }
  ExactSearch search;
  std::vector<Cell2> cells = p.cells();
  const bool ok = search.search(cells);
  r.explored_states = search.explored;
  if (!ok) {
    r.status = DecisionStatus::not_constructible;
    return r;
  }
  r.status = DecisionStatus::constructible;
  auto removals = search.reconstruct(p.cells());
  ConstructionSequence seq;
  std::vector<Cell2> rest = p.cells();
  for (auto& [t, d] : removals)
    rest.erase(std::find(rest.begin(), rest.end(), t));
  seq.seed = rest.front();
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    seq.steps.push_back({it->second, lane_coordinate(it->first, it->second)});
  r.sequence = std::move(seq);
  return r;
}

std::string render_sequence(const ConstructionSequence& seq) {
  std::ostringstream out;
  out << "seed " << seq.seed.x << ' ' << seq.seed.y << '\n';
  for (const ConstructionStep& s : seq.steps)
    out << "step " << to_char(s.direction) << ' ' << s.lane << '\n';
  return out.str();
}

ConstructionSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ConstructionSequence seq;
  bool have_seed = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank or comment line
    if (word == "seed") {
      if (have_seed) throw parse_error("sequence: duplicate seed line");
      if (!(ls >> seq.seed.x >> seq.seed.y))
        throw parse_error("sequence: malformed seed line");
      have_seed = true;
    } else if (word == "step") {
      if (!have_seed) throw parse_error("sequence: step before seed");
      std::string dir;
      std::int32_t lane;
      if (!(ls >> dir >> lane) || dir.size() != 1)
        throw parse_error("sequence: malformed step line");
      auto d = direction2_from_char(dir[0]);
      if (!d) throw parse_error("sequence: unknown direction");
      seq.steps.push_back({*d, lane});
    } else {
      throw parse_error("sequence: unknown keyword '" + word + "'");
    }
    std::string extra;
    if (ls >> extra) throw parse_error("sequence: trailing tokens on line");
  }
  if (!have_seed) throw parse_error("sequence: missing seed line");
  return seq;
}

}  // namespace tilt
