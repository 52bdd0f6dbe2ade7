#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

namespace tilt {

// Thrown when an operation would exceed its configured size or state budget.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed text input (shape, sequence or maze files).
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Lattice cell. x grows east, y grows north.
struct Cell2 {
  std::int32_t x = 0;
  std::int32_t y = 0;
  constexpr auto operator<=>(const Cell2&) const = default;
};

constexpr Cell2 operator+(Cell2 a, Cell2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Cell2 operator-(Cell2 a, Cell2 b) { return {a.x - b.x, a.y - b.y}; }

// 3D cell. z grows up.
struct Cell3 {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;
  constexpr auto operator<=>(const Cell3&) const = default;
};

constexpr Cell3 operator+(Cell3 a, Cell3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Cell3 operator-(Cell3 a, Cell3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// A direction names the side a tile arrives from (a tile added "from north"
// flies south). Also used for tilt-force directions in the world simulator.
enum class Direction2 : std::uint8_t { north, east, south, west };

inline constexpr std::array<Direction2, 4> kAllDirections2 = {
    Direction2::north, Direction2::east, Direction2::south, Direction2::west};

constexpr Cell2 unit(Direction2 d) {
  switch (d) {
    case Direction2::north: return {0, 1};
    case Direction2::east: return {1, 0};
    case Direction2::south: return {0, -1};
    case Direction2::west: return {-1, 0};
  }
  return {};
}

constexpr Direction2 opposite(Direction2 d) {
  switch (d) {
    case Direction2::north: return Direction2::south;
    case Direction2::east: return Direction2::west;
    case Direction2::south: return Direction2::north;
    case Direction2::west: return Direction2::east;
  }
  return Direction2::north;
}

constexpr bool is_vertical(Direction2 d) {
  return d == Direction2::north || d == Direction2::south;
}

// Lane of a construction step: the column for north/south arrivals, the row
// for east/west arrivals.
constexpr std::int32_t lane_coordinate(Cell2 c, Direction2 d) {
  return is_vertical(d) ? c.x : c.y;
}

constexpr char to_char(Direction2 d) {
  switch (d) {
    case Direction2::north: return 'n';
    case Direction2::east: return 'e';
    case Direction2::south: return 's';
    case Direction2::west: return 'w';
  }
  return '?';
}

constexpr std::optional<Direction2> direction2_from_char(char c) {
  switch (c) {
    case 'n': return Direction2::north;
    case 'e': return Direction2::east;
    case 's': return Direction2::south;
    case 'w': return Direction2::west;
    default: return std::nullopt;
  }
}

enum class Direction3 : std::uint8_t { up, down, north, east, south, west };

inline constexpr std::array<Direction3, 6> kAllDirections3 = {
    Direction3::up,   Direction3::down,  Direction3::north,
    Direction3::east, Direction3::south, Direction3::west};

constexpr Cell3 unit(Direction3 d) {
  switch (d) {
    case Direction3::up: return {0, 0, 1};
    case Direction3::down: return {0, 0, -1};
    case Direction3::north: return {0, 1, 0};
    case Direction3::east: return {1, 0, 0};
    case Direction3::south: return {0, -1, 0};
    case Direction3::west: return {-1, 0, 0};
  }
  return {};
}

constexpr Direction3 opposite(Direction3 d) {
  switch (d) {
    case Direction3::up: return Direction3::down;
    case Direction3::down: return Direction3::up;
    case Direction3::north: return Direction3::south;
    case Direction3::east: return Direction3::west;
    case Direction3::south: return Direction3::north;
    case Direction3::west: return Direction3::east;
  }
  return Direction3::up;
}

constexpr const char* to_string(Direction3 d) {
  switch (d) {
    case Direction3::up: return "up";
    case Direction3::down: return "down";
    case Direction3::north: return "north";
    case Direction3::east: return "east";
    case Direction3::south: return "south";
    case Direction3::west: return "west";
  }
  return "?";
}

// Subset of the six 3D arrival directions.
struct DirectionSet3 {
  std::uint8_t mask = 0;

  constexpr bool contains(Direction3 d) const {
    return (mask >> static_cast<unsigned>(d)) & 1u;
  }
  constexpr DirectionSet3 with(Direction3 d) const {
    return {static_cast<std::uint8_t>(mask | (1u << static_cast<unsigned>(d)))};
  }
  constexpr bool empty() const { return mask == 0; }

  static constexpr DirectionSet3 all6() { return {0b111111}; }
  static constexpr DirectionSet3 no_below() {
    return all6().without(Direction3::down);
  }
  static constexpr DirectionSet3 lateral() {
    return no_below().without(Direction3::up);
  }
  constexpr DirectionSet3 without(Direction3 d) const {
    return {static_cast<std::uint8_t>(mask & ~(1u << static_cast<unsigned>(d)))};
  }
};

constexpr std::uint64_t cell_key(Cell2 c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint32_t>(c.y);
}

constexpr Cell2 cell_from_key(std::uint64_t k) {
  return {static_cast<std::int32_t>(static_cast<std::uint32_t>(k >> 32)),
          static_cast<std::int32_t>(static_cast<std::uint32_t>(k))};
}

constexpr std::uint64_t cell_key(Cell3 c) {
  // 21 bits per coordinate, biased; plenty for desk-scale polycubes.
  const std::uint64_t bias = 1u << 20;
  return ((static_cast<std::uint64_t>(c.x) + bias) << 42) |
         ((static_cast<std::uint64_t>(c.y) + bias) << 21) |
         (static_cast<std::uint64_t>(c.z) + bias);
}

}  // namespace tilt

template <>
struct std::hash<tilt::Cell2> {
  std::size_t operator()(tilt::Cell2 c) const noexcept {
    std::uint64_t k = tilt::cell_key(c);
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

template <>
struct std::hash<tilt::Cell3> {
  std::size_t operator()(tilt::Cell3 c) const noexcept {
    std::uint64_t k = tilt::cell_key(c);
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};
