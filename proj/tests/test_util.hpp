#pragma once

#include <string>
#include <vector>

#include "tilt/ascii_io.hpp"
#include "tilt/polyomino.hpp"

namespace tilt::test {

inline Polyomino shape(const std::string& ascii) { return parse_polyomino(ascii); }

inline Polyomino cells(std::vector<Cell2> v) { return Polyomino(std::move(v)); }

inline Polyomino rectangle(std::int32_t w, std::int32_t h) {
  std::vector<Cell2> out;
  for (std::int32_t x = 0; x < w; ++x)
    for (std::int32_t y = 0; y < h; ++y) out.push_back({x, y});
  return cells(std::move(out));
}

inline Polyomino line(std::int32_t len, bool horizontal = true) {
  std::vector<Cell2> out;
  for (std::int32_t i = 0; i < len; ++i)
    out.push_back(horizontal ? Cell2{i, 0} : Cell2{0, i});
  return cells(std::move(out));
}

inline Polyomino plus_pentomino() {
  return cells({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});
}

}  // namespace tilt::test
