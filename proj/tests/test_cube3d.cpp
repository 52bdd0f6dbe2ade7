#include <doctest.h>

#include <random>
#include <unordered_set>

#include "tilt/cube3d.hpp"
#include "tilt/enumerate.hpp"
#include "test_util.hpp"

using namespace tilt;

namespace {

Polycube cube_cells(std::vector<Cell3> v) { return Polycube(std::move(v)); }

Polycube solid_cube(std::int32_t side) {
  std::vector<Cell3> out;
  for (std::int32_t x = 0; x < side; ++x)
    for (std::int32_t y = 0; y < side; ++y)
      for (std::int32_t z = 0; z < side; ++z) out.push_back({x, y, z});
  return cube_cells(std::move(out));
}

// Literal slide-from-infinity simulation with face-adjacency stopping.
std::optional<Cell3> slide_oracle(const Polycube& p, ConstructionStep3 s) {
  const Cell3 lo = p.min_corner() - Cell3{2, 2, 2};
  const Cell3 hi = p.max_corner() + Cell3{2, 2, 2};
  const Cell3 arrival = unit(s.direction);
  Cell3 cur;
  switch (s.direction) {
    case Direction3::up: cur = {s.a, s.b, hi.z}; break;
    case Direction3::down: cur = {s.a, s.b, lo.z}; break;
    case Direction3::north: cur = {s.a, hi.y, s.b}; break;
    case Direction3::south: cur = {s.a, lo.y, s.b}; break;
    case Direction3::east: cur = {hi.x, s.a, s.b}; break;
    case Direction3::west: cur = {lo.x, s.a, s.b}; break;
  }
  for (;;) {
    for (Direction3 d : kAllDirections3)
      if (p.contains(cur + unit(d))) return cur;
    cur = cur - arrival;
    if (cur.x < lo.x || cur.x > hi.x || cur.y < lo.y || cur.y > hi.y || cur.z < lo.z ||
        cur.z > hi.z)
      return std::nullopt;
  }
}

bool path_order_constructible(const std::vector<Cell3>& path, DirectionSet3 dirs) {
  std::vector<Cell3> placed;
  for (Cell3 c : path) {
    if (!placed.empty()) {
      bool ok = false;
      for (Direction3 d : kAllDirections3)
        if (dirs.contains(d) && !blocked_3d(placed, c, d)) ok = true;
      if (!ok) return false;
    }
    placed.push_back(c);
  }
  return true;
}

}  // namespace

TEST_CASE("blocked_3d basics") {
  // Flat bar: an empty cell beside it is reachable from above.
  Polycube bar = cube_cells({{0, 0, 0}, {1, 0, 0}});
  CHECK_FALSE(blocked_3d(bar, {2, 0, 0}, Direction3::up));

  // Directly below an occupied cell: blocked from above.
  Polycube tower = cube_cells({{0, 0, 1}, {0, 0, 2}});
  CHECK(blocked_3d(tower, {0, 0, 0}, Direction3::up));

  // A diagonal-only overhang does not block: stopping uses face adjacency.
  Polycube overhang = cube_cells({{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}});
  CHECK(blocked_3d(overhang, {0, 0, 0}, Direction3::up));   // (1,0,k) in cross lanes
  Polycube diag = cube_cells({{1, 1, 3}, {1, 0, 3}, {0, 0, 3}});
  CHECK_FALSE(blocked_3d(diag, {2, 2, 0}, Direction3::up));  // offset 2: outside cross
}

TEST_CASE("landing agrees with the literal slide simulation") {
  std::mt19937 rng(11);
  for (int round = 0; round < 80; ++round) {
    std::vector<Cell3> cells{{0, 0, 0}};
    std::unordered_set<Cell3> present{{0, 0, 0}};
    while (cells.size() < 10) {
      Cell3 base = cells[rng() % cells.size()];
      Cell3 nb = base + unit(kAllDirections3[rng() % 6]);
      if (present.insert(nb).second) cells.push_back(nb);
    }
    Polycube p = cube_cells(cells);
    for (Direction3 d : kAllDirections3) {
      for (int probe = 0; probe < 12; ++probe) {
        ConstructionStep3 s{d, static_cast<std::int32_t>(rng() % 7) - 3,
                            static_cast<std::int32_t>(rng() % 7) - 3};
        REQUIRE(landing_cell_3d(p.cells(), s) == slide_oracle(p, s));
      }
    }
  }
}

TEST_CASE("decide_polycube basics") {
  Polycube single = cube_cells({{0, 0, 0}});
  CHECK(decide_polycube(single, DirectionSet3::all6()).ok());

  auto two = decide_polycube(solid_cube(2), DirectionSet3::all6());
  REQUIRE(two.ok());
  auto rebuilt = replay_3d(*two.sequence);
  REQUIRE(rebuilt.has_value());
  CHECK(canonicalize(*rebuilt) == canonicalize(solid_cube(2)));

  CHECK(decide_polycube(solid_cube(3), DirectionSet3::all6(), 18).status ==
        DecisionStatus::resource_limit);
  CHECK_THROWS_AS(decide_polycube(single, DirectionSet3{0}), std::invalid_argument);
}

TEST_CASE("witnesses replay to the input polycube") {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    std::vector<Cell3> cells{{0, 0, 0}};
    std::unordered_set<Cell3> present{{0, 0, 0}};
    while (cells.size() < 8) {
      Cell3 base = cells[rng() % cells.size()];
      Cell3 nb = base + unit(kAllDirections3[rng() % 6]);
      if (present.insert(nb).second) cells.push_back(nb);
    }
    Polycube p = cube_cells(cells);
    for (DirectionSet3 dirs : {DirectionSet3::all6(), DirectionSet3::no_below()}) {
      auto r = decide_polycube(p, dirs);
      if (!r.ok()) continue;
      auto rebuilt = replay_3d(*r.sequence);
      REQUIRE(rebuilt.has_value());
      REQUIRE(canonicalize(*rebuilt) == canonicalize(p));
    }
  }
}

TEST_CASE("direction monotonicity") {
  for (int n = 1; n <= 6; ++n) {
    for_each_fixed_polyomino(n, [&](const Polyomino& p) {
      Polycube flat = flat_embedding(p);
      const bool lateral = decide_polycube(flat, DirectionSet3::lateral()).ok();
      const bool no_below = decide_polycube(flat, DirectionSet3::no_below()).ok();
      const bool all = decide_polycube(flat, DirectionSet3::all6()).ok();
      if (lateral) REQUIRE(no_below);
      if (no_below) REQUIRE(all);
    });
  }
}

TEST_CASE("flat embeddings reproduce 2d decisions under lateral directions") {
  for (int n = 1; n <= 6; ++n) {
    for_each_fixed_polyomino(n, [&](const Polyomino& p) {
      const bool lateral3d =
          decide_polycube(flat_embedding(p), DirectionSet3::lateral()).ok();
      const bool twod = decide_exact(p, 8).ok();
      REQUIRE(lateral3d == twod);
    });
  }
}

TEST_CASE("flat embedding commutes with canonical form and lifts sequences") {
  Polyomino plus = tilt::test::plus_pentomino();
  CHECK(canonicalize(flat_embedding(plus)) == flat_embedding(canonicalize(plus)));

  auto r = decide_simple(plus);
  REQUIRE(r.ok());
  auto lifted = lift_sequence(*r.sequence);
  auto rebuilt = replay_3d(lifted);
  REQUIRE(rebuilt.has_value());
  CHECK(canonicalize(*rebuilt) == canonicalize(flat_embedding(plus)));
}

TEST_CASE("constructible_path_3d") {
  // Straight column.
  Polycube column = cube_cells({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}});
  auto r = constructible_path_3d(column, {0, 0, 0}, {0, 0, 3});
  REQUIRE(r.ok());
  CHECK(r.path->length() == 4);

  // Degenerate query.
  auto self = constructible_path_3d(column, {0, 0, 1}, {0, 0, 1});
  REQUIRE(self.ok());
  CHECK(self.path->length() == 1);

  CHECK_THROWS_AS(constructible_path_3d(column, {9, 9, 9}, {0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("path search avoids a self-blocking route") {
  // The long hook ordering walls in its own goal; the short route stays open.
  const std::vector<Cell3> hook = {{1, -1, 0}, {0, -1, 0}, {0, 0, 0}, {0, 0, 1},
                                   {1, 0, 1},  {2, 0, 1},  {2, 0, 0}, {2, 1, 0},
                                   {1, 1, 0},  {1, 0, 0}};
  CHECK_FALSE(path_order_constructible(hook, DirectionSet3::no_below()));

  Polycube p = cube_cells(hook);
  auto r = constructible_path_3d(p, {1, -1, 0}, {1, 0, 0}, 1'000'000,
                                 DirectionSet3::no_below());
  REQUIRE(r.ok());
  CHECK(path_order_constructible(r.path->cells, DirectionSet3::no_below()));
  CHECK(r.path->length() < hook.size());
}
