#include "tilt/blocking_index.hpp"

#include <algorithm>

namespace tilt {

BlockingIndex::BlockingIndex(const Polyomino& p) : BlockingIndex(p.cells()) {}

BlockingIndex::BlockingIndex(const std::vector<Cell2>& cells) {
  for (Cell2 c : cells) insert(c);
}

bool BlockingIndex::contains(Cell2 t) const {
  auto it = cols_.find(t.x);
  return it != cols_.end() && it->second.count(t.y) != 0;
}

void BlockingIndex::insert(Cell2 t) {
  if (!cols_[t.x].insert(t.y).second)
    throw std::invalid_argument("blocking index: cell already present");
  rows_[t.y].insert(t.x);
  ++size_;
}

void BlockingIndex::remove(Cell2 t) {
  auto cit = cols_.find(t.x);
  if (cit == cols_.end() || cit->second.erase(t.y) == 0)
    throw std::invalid_argument("blocking index: cell not present");
  if (cit->second.empty()) cols_.erase(cit);
  auto rit = rows_.find(t.y);
  rit->second.erase(t.x);
  if (rit->second.empty()) rows_.erase(rit);
  --size_;
}

bool BlockingIndex::is_blocked(Cell2 p, Direction2 d) const {
  const bool vertical = is_vertical(d);
  const LaneMap& lanes = vertical ? cols_ : rows_;
  const std::int32_t lane = vertical ? p.x : p.y;
  const std::int32_t pos = vertical ? p.y : p.x;
  const bool greater = (d == Direction2::north || d == Direction2::east);
  for (std::int32_t delta = -1; delta <= 1; ++delta) {
    auto it = lanes.find(lane + delta);
    if (it == lanes.end()) continue;
    const auto& s = it->second;
    if (greater) {
      if (s.upper_bound(pos) != s.end()) return true;
    } else {
      auto lb = s.lower_bound(pos);
      if (lb != s.begin()) return true;
    }
  }
  return false;
}

std::optional<Cell2> BlockingIndex::nearest_beyond(Cell2 p, Direction2 d,
                                                   std::int32_t lane) const {
  const bool vertical = is_vertical(d);
  const LaneMap& lanes = vertical ? cols_ : rows_;
  const std::int32_t pos = vertical ? p.y : p.x;
  const bool greater = (d == Direction2::north || d == Direction2::east);
  auto it = lanes.find(lane);
  if (it == lanes.end()) return std::nullopt;
  const auto& s = it->second;
  std::optional<std::int32_t> found;
  if (greater) {
    auto ub = s.upper_bound(pos);
    if (ub != s.end()) found = *ub;
  } else {
    auto lb = s.lower_bound(pos);
    if (lb != s.begin()) found = *std::prev(lb);
  }
  if (!found) return std::nullopt;
  return vertical ? Cell2{lane, *found} : Cell2{*found, lane};
}

std::vector<Cell2> BlockingIndex::frontier_after_removal(Cell2 t) const {
  std::vector<Cell2> out;
  out.reserve(12);
  for (Direction2 d : kAllDirections2) {
    const bool vertical = is_vertical(d);
    const std::int32_t center = vertical ? t.x : t.y;
    for (std::int32_t delta = -1; delta <= 1; ++delta) {
      if (auto c = nearest_beyond(t, d, center + delta)) out.push_back(*c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Cell2> BlockingIndex::landing(Direction2 from, std::int32_t lane) const {
  const bool vertical = is_vertical(from);
  const LaneMap& lanes = vertical ? cols_ : rows_;
  // Scanning toward the shape: a tile from north or east travels toward
  // decreasing coordinates, so it stops at the maximal qualifying position.
  const bool from_high = (from == Direction2::north || from == Direction2::east);
  std::optional<std::int32_t> best;
  for (std::int32_t delta = -1; delta <= 1; ++delta) {
    auto it = lanes.find(lane + delta);
    if (it == lanes.end() || it->second.empty()) continue;
    const auto& s = it->second;
    std::int32_t candidate;
    if (from_high) {
      candidate = *s.rbegin() + (delta == 0 ? 1 : 0);
      if (!best || candidate > *best) best = candidate;
    } else {
      candidate = *s.begin() - (delta == 0 ? 1 : 0);
      if (!best || candidate < *best) best = candidate;
    }
  }
  if (!best) return std::nullopt;
  return vertical ? Cell2{lane, *best} : Cell2{*best, lane};
}

}  // namespace tilt
