#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "tilt/tap.hpp"
#include "tilt/world.hpp"

namespace tilt {

// A depot releases one tile at its cell every `period` steps starting at
// `first_step`, up to `capacity` tiles. The released tile rides the settle of
// its release step; `flight` is the motion direction it is carried along.
struct MazeDepot {
  Cell2 cell;
  Direction2 flight;
  std::int64_t first_step = 0;
  std::int64_t period = 4;
  std::int64_t capacity = 0;
};

// Spiral maze realizing pipelined assembly: the product's partial assemblies
// travel the spiral outward, one full turn per ⟨w,n,e,s⟩ cycle, collecting
// one tile per mapped construction step.
struct MazeLayout {
  std::vector<Cell2> walls;
  std::vector<MazeDepot> depots;  // depot 0 feeds seeds
  std::array<Direction2, 4> schedule{Direction2::west, Direction2::north,
                                     Direction2::east, Direction2::south};
  Polyomino product;              // canonical expected product
  std::int64_t copies = 0;
  std::int64_t last_feed_slot = -1;  // unit-step slot of the final attachment
  std::int64_t total_legs = 0;
};

// Builds the spiral layout for `copies` copies of the sequence's shape.
// The sequence must verify; each step must admit a straight feed lane with a
// frontal stop (re-aimed toward an occupied neighbor when needed).
// Throws std::invalid_argument otherwise.
MazeLayout generate_maze(const ConstructionSequence& seq, std::int64_t copies);

// A sequence whose every step can be fed in a maze: tries decide_simple's
// output first, then an exact search constrained to feedable insertions.
std::optional<ConstructionSequence> find_pipeline_sequence(
    const Polyomino& p, std::size_t exact_limit = kDefaultExactLimit);

struct PipelineReport {
  bool success = false;
  std::string failure;
  std::int64_t copies_completed = 0;
  std::int64_t copies_exited = 0;
  std::optional<std::int64_t> first_copy_step;
  std::vector<std::int64_t> completion_steps;  // per copy, in seed order
  std::int64_t steps_run = 0;
  std::vector<std::string> trace;  // one line per settle plus events
};

// Simulates the layout until `copies` congruent copies have completed and
// left the construction zone, or the step budget runs out (budget < 0 picks
// a bound from the layout). Every completed copy is checked for
// translation-congruence with the expected product.
PipelineReport run_pipeline(const MazeLayout& layout, std::int64_t copies,
                            std::int64_t step_budget = -1, bool want_trace = false,
                            std::ostream* frames = nullptr);

// Maze grid: '#' wall, '.' free, 'D' depot cell; sidecar schedule lists the
// depots (index, cell, flight, first release, period, capacity) and embeds
// the expected product.
std::string render_maze_grid(const MazeLayout& layout);
std::string render_schedule(const MazeLayout& layout);
MazeLayout parse_maze(const std::string& grid_text, const std::string& schedule_text);

}  // namespace tilt
