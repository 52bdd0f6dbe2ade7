#include <benchmark/benchmark.h>

#include "tilt/blocking_index.hpp"
#include "tilt/tap.hpp"

namespace {

tilt::Polyomino rectangle(std::int32_t w, std::int32_t h) {
  std::vector<tilt::Cell2> cells;
  cells.reserve(static_cast<std::size_t>(w) * h);
  for (std::int32_t x = 0; x < w; ++x)
    for (std::int32_t y = 0; y < h; ++y) cells.push_back({x, y});
  std::sort(cells.begin(), cells.end());
  return tilt::Polyomino::unchecked(std::move(cells));
}

void BM_DecideRectangle(benchmark::State& state) {
  const auto side = static_cast<std::int32_t>(state.range(0));
  tilt::Polyomino p = rectangle(side, side);
  for (auto _ : state) {
    auto r = tilt::decide_simple(p);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(static_cast<std::int64_t>(side) * side);
}
BENCHMARK(BM_DecideRectangle)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_BlockedQuery(benchmark::State& state) {
  tilt::Polyomino p = rectangle(static_cast<std::int32_t>(state.range(0)),
                                static_cast<std::int32_t>(state.range(0)));
  tilt::BlockingIndex ix(p);
  std::int32_t i = 0;
  for (auto _ : state) {
    const tilt::Cell2 cell{i % state.range(0), 0};
    benchmark::DoNotOptimize(ix.is_blocked(cell, tilt::Direction2::north));
    ++i;
  }
}
BENCHMARK(BM_BlockedQuery)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
