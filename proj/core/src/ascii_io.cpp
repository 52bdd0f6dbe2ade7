#include "tilt/ascii_io.hpp"

#include <fstream>
#include <sstream>

namespace tilt {

namespace {

std::vector<std::string> grid_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Trim leading/trailing blank lines; reject interior ones.
  std::size_t first = 0, last = lines.size();
  while (first < last && lines[first].empty()) ++first;
  while (last > first && lines[last - 1].empty()) --last;
  for (std::size_t i = first; i < last; ++i)
    if (lines[i].empty()) throw parse_error("blank line inside a shape");
  return {lines.begin() + first, lines.begin() + last};
}

std::vector<Cell2> cells_of_layer(const std::vector<std::string>& lines) {
  std::vector<Cell2> cells;
  const std::int32_t rows = static_cast<std::int32_t>(lines.size());
  for (std::int32_t r = 0; r < rows; ++r) {
    const std::string& line = lines[r];
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char ch = line[col];
      if (ch == '#')
        cells.push_back({static_cast<std::int32_t>(col), rows - 1 - r});
      else if (ch != '.')
        throw parse_error(std::string("unexpected character '") + ch + "' in shape");
    }
  }
  return cells;
}

}  // namespace

Polyomino parse_polyomino(const std::string& text) {
  auto lines = grid_lines(text);
  if (lines.empty()) throw parse_error("empty shape");
  auto cells = cells_of_layer(lines);
  if (cells.empty()) throw parse_error("shape has no tiles");
  try {
    return canonicalize(Polyomino(std::move(cells)));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string render_ascii(const Polyomino& p) {
  const Cell2 lo = p.min_corner();
  const Cell2 hi = p.max_corner();
  const std::int32_t w = hi.x - lo.x + 1;
  const std::int32_t h = hi.y - lo.y + 1;
  std::vector<std::string> rows(h, std::string(w, '.'));
  for (Cell2 c : p.cells()) rows[hi.y - c.y][c.x - lo.x] = '#';
  std::string out;
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

bool looks_like_3d(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "---") return true;
  }
  return false;
}

Polycube parse_polycube(const std::string& text) {
  std::vector<std::vector<std::string>> layers(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "---")
      layers.emplace_back();
    else
      layers.back().push_back(line);
  }
  std::vector<Cell3> cells;
  const std::int32_t nz = static_cast<std::int32_t>(layers.size());
  for (std::int32_t li = 0; li < nz; ++li) {
    std::vector<std::string> lines;
    {
      std::ostringstream joined;
      for (auto& l : layers[li]) joined << l << '\n';
      lines = grid_lines(joined.str());
    }
    for (Cell2 c : cells_of_layer(lines)) cells.push_back({c.x, c.y, nz - 1 - li});
  }
  if (cells.empty()) throw parse_error("shape has no tiles");
  try {
    return canonicalize(Polycube(std::move(cells)));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string render_ascii(const Polycube& p) {
  const Cell3 lo = p.min_corner();
  const Cell3 hi = p.max_corner();
  std::string out;
  for (std::int32_t z = hi.z; z >= lo.z; --z) {
    if (z != hi.z) out += "---\n";
    const std::int32_t w = hi.x - lo.x + 1;
    const std::int32_t h = hi.y - lo.y + 1;
    std::vector<std::string> rows(h, std::string(w, '.'));
    for (Cell3 c : p.cells())
      if (c.z == z) rows[hi.y - c.y][c.x - lo.x] = '#';
    for (const std::string& r : rows) {
      out += r;
      out += '\n';
    }
  }
  return out;
}

std::string render_svg(const Polyomino& p) {
  const Cell2 lo = p.min_corner();
  const Cell2 hi = p.max_corner();
  const int scale = 16;
  const std::int32_t w = (hi.x - lo.x + 1) * scale;
  const std::int32_t h = (hi.y - lo.y + 1) * scale;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
      << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (Cell2 c : p.cells()) {
    const std::int32_t px = (c.x - lo.x) * scale;
    const std::int32_t py = (hi.y - c.y) * scale;
    out << "  <rect id=\"c_" << c.x - lo.x << '_' << c.y - lo.y << "\" x=\"" << px
        << "\" y=\"" << py << "\" width=\"" << scale << "\" height=\"" << scale
        << "\" fill=\"#444\" stroke=\"#fff\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace tilt
