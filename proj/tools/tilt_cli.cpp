// Command-line surface for the tilt assembly toolkit.
//
// Exit codes: 0 = positive answer / success, 1 = negative answer,
// 2 = not supported or resource limit, 64 = malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tilt/ascii_io.hpp"
#include "tilt/cube3d.hpp"
#include "tilt/enumerate.hpp"
#include "tilt/maxtap.hpp"
#include "tilt/maze.hpp"
#include "tilt/tap.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitBadInput = 64;

struct CliError {
  int code;
  std::string message;
};

tilt::Cell2 parse_cell2(const std::string& s) {
  std::istringstream in(s);
  tilt::Cell2 c;
  char comma;
  if (!(in >> c.x >> comma >> c.y) || comma != ',')
    throw CliError{kExitBadInput, "expected a cell as x,y"};
  return c;
}

tilt::Cell3 parse_cell3(const std::string& s) {
  std::istringstream in(s);
  tilt::Cell3 c;
  char c1, c2;
  if (!(in >> c.x >> c1 >> c.y >> c2 >> c.z) || c1 != ',' || c2 != ',')
    throw CliError{kExitBadInput, "expected a cell as x,y,z"};
  return c;
}

tilt::DirectionSet3 parse_dirs(const std::string& s) {
  if (s == "all") return tilt::DirectionSet3::all6();
  if (s == "no-below") return tilt::DirectionSet3::no_below();
  if (s == "lateral") return tilt::DirectionSet3::lateral();
  throw CliError{kExitBadInput, "unknown direction set: " + s};
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    tilt::write_file(out_path, content);
}

int exit_code_of(const tilt::DecisionStatus s) {
  switch (s) {
    case tilt::DecisionStatus::constructible: return kExitYes;
    case tilt::DecisionStatus::not_constructible: return kExitNo;
    default: return kExitUnsupported;
  }
}

int cmd_decide(const std::string& shape_path, const std::string& seed_opt, bool exact,
               std::size_t limit, const std::string& dirs_opt, const std::string& out) {
  const std::string text = tilt::read_file(shape_path);
  if (tilt::looks_like_3d(text)) {
    tilt::Polycube p = tilt::parse_polycube(text);
    tilt::DecisionResult3 r = tilt::decide_polycube(p, parse_dirs(dirs_opt),
                                                    limit ? limit : 18);
    if (!r.ok()) {
      std::cerr << (r.reason.empty() ? std::string("not constructible") : r.reason)
                << "\n";
      return exit_code_of(r.status);
    }
    std::ostringstream seq;
    const auto& s = *r.sequence;
    seq << "seed3 " << s.seed.x << ' ' << s.seed.y << ' ' << s.seed.z << '\n';
    for (const auto& st : s.steps)
      seq << "step3 " << tilt::to_string(st.direction) << ' ' << st.a << ' ' << st.b
          << '\n';
    emit(out, seq.str());
    return kExitYes;
  }
  tilt::Polyomino p = tilt::parse_polyomino(text);
  std::optional<tilt::Cell2> seed;
  if (!seed_opt.empty()) seed = parse_cell2(seed_opt);
  if (exact && seed) {
    std::cerr << "--seed is only supported by the greedy decider\n";
    return kExitBadInput;
  }
  tilt::DecisionResult r =
      exact ? tilt::decide_exact(p, limit ? limit : tilt::kDefaultExactLimit)
            : tilt::decide_simple(p, seed);
  if (!r.ok()) {
    std::cerr << (r.reason.empty() ? std::string("not constructible") : r.reason) << "\n";
    return exit_code_of(r.status);
  }
  emit(out, tilt::render_sequence(*r.sequence));
  return kExitYes;
}

int cmd_verify(const std::string& shape_path, const std::string& seq_path) {
  tilt::Polyomino p = tilt::parse_polyomino(tilt::read_file(shape_path));
  tilt::ConstructionSequence seq = tilt::parse_sequence(tilt::read_file(seq_path));
  tilt::VerifyResult r = tilt::verify(p, seq);
  if (r.ok) {
    std::cout << "ok\n";
    return kExitYes;
  }
  std::cerr << "verification failed: " << r.reason;
  if (r.failed_step) std::cerr << " (step " << *r.failed_step << ")";
  std::cerr << "\n";
  return kExitNo;
}

int cmd_maxtap(const std::string& shape_path, std::size_t limit,
               const std::string& out_shape, const std::string& out_seq) {
  tilt::Polyomino p = tilt::parse_polyomino(tilt::read_file(shape_path));
  tilt::MaxTapResult r = tilt::exact_maxtap(p, limit);
  std::cout << "maxtap size " << r.subshape.size() << " of " << p.size() << "\n";
  emit(out_shape, tilt::render_ascii(r.subshape));
  if (!out_seq.empty()) tilt::write_file(out_seq, tilt::render_sequence(r.sequence));
  return kExitYes;
}

int cmd_path(const std::string& shape_path, const std::string& mode,
             const std::string& from_opt, const std::string& to_opt,
             const std::string& dirs_opt, const std::string& out) {
  const std::string text = tilt::read_file(shape_path);
  if (tilt::looks_like_3d(text)) {
    if (from_opt.empty() || to_opt.empty())
      throw CliError{kExitBadInput, "3d path queries need --from and --to"};
    tilt::Polycube p = tilt::parse_polycube(text);
    tilt::PathResult3 r = tilt::constructible_path_3d(
        p, parse_cell3(from_opt), parse_cell3(to_opt), 2'000'000, parse_dirs(dirs_opt));
    if (r.status == tilt::DecisionStatus::resource_limit) {
      std::cerr << "search budget exhausted\n";
      return kExitUnsupported;
    }
    if (!r.ok()) {
      std::cerr << "no constructible path\n";
      return kExitNo;
    }
    std::ostringstream os;
    for (const auto& c : r.path->cells) os << c.x << ',' << c.y << ',' << c.z << '\n';
    emit(out, os.str());
    return kExitYes;
  }
  tilt::Polyomino p = tilt::parse_polyomino(text);
  tilt::TilePath path;
  if (mode == "tree" || (mode == "auto" && tilt::is_tree_shaped(p))) {
    if (!tilt::is_tree_shaped(p)) {
      std::cerr << "shape is not tree-shaped\n";
      return kExitUnsupported;
    }
    path = tilt::longest_sequential_path_tree(p);
  } else {
    if (!tilt::is_simple(p)) {
      std::cerr << "shape is neither tree-shaped nor simple\n";
      return kExitUnsupported;
    }
    path = tilt::longest_constructible_shortest_path(p);
  }
  std::ostringstream os;
  os << "length " << path.length() << '\n';
  for (const auto& c : path.cells) os << c.x << ',' << c.y << '\n';
  emit(out, os.str());
  return kExitYes;
}

int cmd_maze(const std::string& shape_path, const std::string& seq_path,
             std::int64_t copies, const std::string& out_base) {
  std::optional<tilt::ConstructionSequence> seq;
  if (!seq_path.empty()) {
    seq = tilt::parse_sequence(tilt::read_file(seq_path));
  } else {
    tilt::Polyomino p = tilt::parse_polyomino(tilt::read_file(shape_path));
    seq = tilt::find_pipeline_sequence(p);
    if (!seq) {
      std::cerr << "shape admits no pipelined construction sequence\n";
      return kExitNo;
    }
  }
  tilt::MazeLayout layout = tilt::generate_maze(*seq, copies);
  tilt::write_file(out_base + ".maze", tilt::render_maze_grid(layout));
  tilt::write_file(out_base + ".sched", tilt::render_schedule(layout));
  std::cout << "maze with " << layout.depots.size() << " depots, " << layout.total_legs
            << " legs, capacity " << layout.copies << "\n";
  return kExitYes;
}

int cmd_simulate(const std::string& maze_path, const std::string& sched_path,
                 std::int64_t copies, std::int64_t budget, const std::string& trace_path,
                 const std::string& frames_path) {
  tilt::MazeLayout layout =
      tilt::parse_maze(tilt::read_file(maze_path), tilt::read_file(sched_path));
  if (copies <= 0) copies = layout.copies;
  std::ofstream frames;
  std::ostream* frames_ptr = nullptr;
  if (!frames_path.empty()) {
    frames.open(frames_path);
    frames_ptr = &frames;
  }
  tilt::PipelineReport r =
      tilt::run_pipeline(layout, copies, budget, !trace_path.empty(), frames_ptr);
  if (!trace_path.empty()) {
    std::ostringstream os;
    for (const auto& line : r.trace) os << line << '\n';
    tilt::write_file(trace_path, os.str());
  }
  std::cout << "copies " << r.copies_completed << " exited " << r.copies_exited
            << " steps " << r.steps_run;
  if (r.first_copy_step) std::cout << " first_copy_step " << *r.first_copy_step;
  std::cout << (r.success ? " success" : " failure") << "\n";
  if (!r.success) {
    std::cerr << r.failure << "\n";
    return kExitNo;
  }
  return kExitYes;
}

int cmd_census(int max_n, const std::string& witness_dir) {
  if (max_n > tilt::kEnumerationCap) {
    std::cerr << "census cap is " << tilt::kEnumerationCap << "\n";
    return kExitUnsupported;
  }
  std::optional<tilt::Polyomino> smallest_simple_witness;
  std::optional<tilt::Polyomino> smallest_witness;
  std::cout << "n shapes simple constructible\n";
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t shapes = 0, simple = 0, constructible = 0;
    tilt::for_each_fixed_polyomino(n, [&](const tilt::Polyomino& p) {
      ++shapes;
      const bool s = tilt::is_simple(p);
      if (s) ++simple;
      bool ok;
      if (s) {
        ok = tilt::decide_simple(p).ok();
      } else {
        ok = tilt::decide_exact(p, p.size()).ok();
      }
      if (ok) {
        ++constructible;
      } else {
        if (s && !smallest_simple_witness) smallest_simple_witness = p;
        if (!smallest_witness) smallest_witness = p;
      }
    });
    std::cout << n << ' ' << shapes << ' ' << simple << ' ' << constructible << "\n";
  }
  if (smallest_witness) {
    std::cout << "smallest non-constructible size " << smallest_witness->size() << "\n";
    if (!witness_dir.empty())
      tilt::write_file(witness_dir + "/non_constructible.shape",
                       tilt::render_ascii(*smallest_witness));
  }
  if (smallest_simple_witness) {
    std::cout << "smallest non-constructible simple size "
              << smallest_simple_witness->size() << "\n";
    if (!witness_dir.empty())
      tilt::write_file(witness_dir + "/non_constructible_simple.shape",
                       tilt::render_ascii(*smallest_simple_witness));
  }
  return kExitYes;
}

int cmd_render(const std::string& input_path, const std::string& format,
               const std::string& out) {
  const std::string text = tilt::read_file(input_path);
  if (format == "ascii") {
    if (tilt::looks_like_3d(text))
      emit(out, tilt::render_ascii(tilt::parse_polycube(text)));
    else if (text.rfind("step ", 0) == 0 || text.find("\nstep ") != std::string::npos)
      emit(out, text);  // trace frames are already ascii
    else
      emit(out, tilt::render_ascii(tilt::parse_polyomino(text)));
    return kExitYes;
  }
  if (format != "svg") throw CliError{kExitBadInput, "unknown format: " + format};
  if (tilt::looks_like_3d(text))
    throw CliError{kExitBadInput, "svg rendering supports 2d shapes and traces"};
  emit(out, tilt::render_svg(tilt::parse_polyomino(text)));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilt assembly decision, optimization and factory toolkit"};
  app.require_subcommand(1);

  std::string shape_path, seq_path, out, out_shape, out_seq, seed_opt;
  std::string dirs_opt = "all", mode = "auto", from_opt, to_opt;
  std::string maze_path, sched_path, trace_path, frames_path, witness_dir, format = "ascii";
  bool exact = false;
  std::size_t limit = 0;
  std::int64_t copies = 1, budget = -1;
  int max_n = 8;

  auto* decide = app.add_subcommand("decide", "decide constructibility");
  decide->add_option("shape", shape_path)->required();
  decide->add_option("--seed", seed_opt, "force the seed cell (x,y)");
  decide->add_flag("--exact", exact, "use the exact search (handles holes)");
  decide->add_option("--limit", limit, "instance size limit for exact search");
  decide->add_option("--dirs", dirs_opt, "3d direction set: all|no-below|lateral");
  decide->add_option("-o,--out", out, "sequence output file");

  auto* verify = app.add_subcommand("verify", "replay a sequence against a shape");
  verify->add_option("shape", shape_path)->required();
  verify->add_option("sequence", seq_path)->required();

  auto* maxtap = app.add_subcommand("maxtap", "maximum constructible subshape");
  maxtap->add_option("shape", shape_path)->required();
  maxtap->add_option("--limit", limit);
  maxtap->add_option("--out-shape", out_shape);
  maxtap->add_option("--out-seq", out_seq);

  auto* path = app.add_subcommand("path", "constructible path queries");
  path->add_option("shape", shape_path)->required();
  path->add_option("--mode", mode, "auto|tree|shortest (2d)");
  path->add_option("--from", from_opt, "3d start cell x,y,z");
  path->add_option("--to", to_opt, "3d end cell x,y,z");
  path->add_option("--dirs", dirs_opt);
  path->add_option("-o,--out", out);

  auto* maze = app.add_subcommand("maze", "generate a pipelined factory maze");
  maze->add_option("shape", shape_path)->required();
  maze->add_option("--seq", seq_path, "use this sequence instead of deciding");
  maze->add_option("--copies", copies)->required();
  maze->add_option("-o,--out", out)->required();

  auto* simulate = app.add_subcommand("simulate", "run a factory maze");
  simulate->add_option("maze", maze_path)->required();
  simulate->add_option("schedule", sched_path)->required();
  simulate->add_option("--copies", copies);
  simulate->add_option("--budget", budget);
  simulate->add_option("--trace", trace_path);
  simulate->add_option("--frames", frames_path);

  auto* census = app.add_subcommand("census", "enumerate and classify small shapes");
  census->add_option("--max-n", max_n)->required();
  census->add_option("--witness-dir", witness_dir);

  std::string input_path;
  auto* render = app.add_subcommand("render", "render shapes or traces");
  render->add_option("input", input_path)->required();
  render->add_option("--format", format, "ascii|svg");
  render->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(decide))
      return cmd_decide(shape_path, seed_opt, exact, limit, dirs_opt, out);
    if (app.got_subcommand(verify)) return cmd_verify(shape_path, seq_path);
    if (app.got_subcommand(maxtap))
      return cmd_maxtap(shape_path, limit ? limit : tilt::kDefaultExactLimit, out_shape,
                        out_seq);
    if (app.got_subcommand(path))
      return cmd_path(shape_path, mode, from_opt, to_opt, dirs_opt, out);
    if (app.got_subcommand(maze)) return cmd_maze(shape_path, seq_path, copies, out);
    if (app.got_subcommand(simulate))
      return cmd_simulate(maze_path, sched_path, copies, budget, trace_path, frames_path);
    if (app.got_subcommand(census)) return cmd_census(max_n, witness_dir);
    if (app.got_subcommand(render)) return cmd_render(input_path, format, out);
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const tilt::parse_error& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const tilt::resource_limit_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitBadInput;
}
