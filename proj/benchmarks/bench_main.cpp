// Microbenchmarks for the hot paths: Laurent arithmetic, Chebyshev
// evaluation, subrepresentation counting, character computation with and
// without a warm memo.
#include <benchmark/benchmark.h>

#include "qgr/character.hpp"
#include "qgr/chebyshev.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/laurent.hpp"
#include "qgr/mutation.hpp"
#include "qgr/quiver.hpp"
#include "qgr/tube.hpp"

using namespace qgr;

namespace {

Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver a21() { return Quiver(3, {{0, 1}, {1, 2}, {0, 2}}); }

} // namespace

static void BM_LaurentMul(benchmark::State& state) {
  // term count of both factors grows with the Chebyshev level
  CharacterContext ctx(kronecker());
  LaurentPoly a = cheb_second(static_cast<int>(state.range(0)), ctx.generic_variable());
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_ChebFirst(benchmark::State& state) {
  CharacterContext ctx(kronecker());
  LaurentPoly xd = ctx.generic_variable();
  for (auto _ : state)
    benchmark::DoNotOptimize(cheb_first(static_cast<int>(state.range(0)), xd));
}
BENCHMARK(BM_ChebFirst)->Arg(4)->Arg(8)->Arg(12);

static void BM_CountAllSubreps(benchmark::State& state) {
  // one full sweep over F_p for the quasi-length 2 band on three vertices
  CharacterContext ctx(a21());
  Rep r = ctx.tubes().band(1, false, 2).realize(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_all_subreps(r));
}
BENCHMARK(BM_CountAllSubreps)->Arg(2)->Arg(5)->Arg(11);

static void BM_CharacterCold(benchmark::State& state) {
  // fresh context per iteration: prime sweeps plus interpolation, no memo
  for (auto _ : state) {
    CharacterContext ctx(a21());
    benchmark::DoNotOptimize(ctx.tube_character(0, 0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CharacterCold)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CharacterMemo(benchmark::State& state) {
  CharacterContext ctx(a21());
  ctx.tube_character(0, 0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.tube_character(0, 0, 4));
}
BENCHMARK(BM_CharacterMemo);

static void BM_MutationWalk(benchmark::State& state) {
  Quiver q = a21();
  std::vector<int> seq;
  for (int i = 0; i < state.range(0); ++i) seq.push_back(i % q.n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_sequence(initial_seed(q), seq));
}
BENCHMARK(BM_MutationWalk)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
