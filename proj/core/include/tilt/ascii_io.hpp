#pragma once

#include <string>

#include "tilt/polyomino.hpp"

namespace tilt {

// ASCII grid format: one line per row, northmost row first, '#' = tile,
// '.' = empty. Trailing '.' may be omitted on input; blank lines are
// forbidden inside a shape. Parsed shapes are canonicalized.
Polyomino parse_polyomino(const std::string& text);
std::string render_ascii(const Polyomino& p);

// 3D format: z-layers from top to bottom, separated by a line of exactly
// "---"; each layer is an ASCII grid in the 2D format.
Polycube parse_polycube(const std::string& text);
std::string render_ascii(const Polycube& p);

// Heuristic: text with a layer separator is treated as a 3D shape file.
bool looks_like_3d(const std::string& text);

// One SVG square per tile, with stable per-cell ids.
std::string render_svg(const Polyomino& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tilt
