// Compares the OpenMP-parallel kernels against their serial reference
// implementations on the two hot paths: sign evaluation of the quadratic
// form over a grid, and candidate evaluation over a heart box.

#include <benchmark/benchmark.h>

#include "tiltwall/chern.hpp"
#include "tiltwall/grid.hpp"
#include "tiltwall/search.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/variety.hpp"
#include "tiltwall/walls.hpp"

namespace {

using namespace tiltwall;

const ChernVector kV{7, 4, 1, Rat(1, 6)};

GridSpec grid_of(int n) {
  return GridSpec{Rat(-1, 4), Rat(3, 4), Rat(0), Rat(1, 8), n, n};
}

void BM_QSignGridSerial(benchmark::State& state) {
  GridSpec g = grid_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(q_sign_grid_serial(kV, g));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_QSignGridParallel(benchmark::State& state) {
  GridSpec g = grid_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(q_sign_grid(kV, g, /*workers=*/0));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

// wide candidate box on a unit rank lattice so the kernel has real work
struct EnumerateFixture {
  WallLocus target = q_wall(kV);
  Surd lo{Rat(0)}, hi{Rat(1, 2)};
  Lattice lat{{1, 1, Rat(1, 2), Rat(1, 6)}};
  SearchOptions opt;
};

void BM_EnumerateSerial(benchmark::State& state) {
  EnumerateFixture f;
  Rat cap(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_candidates_serial(kV, f.target, f.lo, f.hi, -cap, cap, f.lat, f.opt));
}

void BM_EnumerateParallel(benchmark::State& state) {
  EnumerateFixture f;
  Rat cap(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_candidates(kV, f.target, f.lo, f.hi, -cap, cap, f.lat, f.opt));
}

}  // namespace

BENCHMARK(BM_QSignGridSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QSignGridParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
