// Microbenchmarks for the hot paths: exact elimination, multiplicative
// closure, and the full halved-cube decomposition.

#include <benchmark/benchmark.h>

#include "terw/bitvec.hpp"
#include "terw/modules.hpp"
#include "terw/qmatrix.hpp"
#include "terw/scheme.hpp"
#include "terw/span.hpp"

namespace {

// Deterministic small integers; keeps runs comparable.
terw::QMatrix lcg_matrix(int rows, int cols, std::uint64_t seed) {
  terw::QMatrix m(rows, cols);
  std::uint64_t s = seed;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = static_cast<long>(s >> 58) - 31;  // range [-31, 32]
    }
  return m;
}

void bm_rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const terw::QMatrix m = lcg_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(terw::rref(m));
}

void bm_closure(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const terw::GraphContext ctx(D, terw::Family::halved_cube);
  const terw::QMatrix a = terw::adjacency_matrix(ctx);
  const terw::QMatrix astar = terw::dual_adjacency(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(terw::span_closure({a, astar}));
}

void bm_decompose(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const terw::GraphContext ctx(D, terw::Family::halved_cube);
  for (auto _ : state) benchmark::DoNotOptimize(terw::decompose_halved(ctx));
}

}  // namespace

BENCHMARK(bm_rref)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_closure)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_decompose)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
