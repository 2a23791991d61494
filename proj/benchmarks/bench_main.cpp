#include <benchmark/benchmark.h>

#include "solweights/group.hpp"
#include "solweights/poset.hpp"
#include "solweights/robinson.hpp"
#include "solweights/zoo.hpp"

using namespace solw;

static void BM_RobinsonGL42(benchmark::State& state) {
  const auto& g = named_group("GL(4,2)")->group;
  for (auto _ : state) benchmark::DoNotOptimize(robinson_matrix(g).rank);
}
BENCHMARK(BM_RobinsonGL42)->Unit(benchmark::kMillisecond);

static void BM_RobinsonA7(benchmark::State& state) {
  const auto& g = named_group("A7")->group;
  for (auto _ : state) benchmark::DoNotOptimize(robinson_matrix(g).rank);
}
BENCHMARK(BM_RobinsonA7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSL2_25(benchmark::State& state) {
  const auto frame = sl2_with_quaternion_frame(1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sl2(frame).order());
}
BENCHMARK(BM_EnumerateSL2_25)->Unit(benchmark::kMillisecond);

static void BM_FrameOrbitSL2_25(benchmark::State& state) {
  const auto frame = sl2_with_quaternion_frame(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(subgroup_conjugation_orbit(frame.sl2_generators, frame.r, frame.sl2_order).orbit_size);
}
BENCHMARK(BM_FrameOrbitSL2_25)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ConstantCohomology(benchmark::State& state) {
  const auto f = ChainPosetFunctor::constant(chain_poset_of(hasse_diagram(static_cast<unsigned>(state.range(0)))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cochain_cohomology(f, 2).h);
}
BENCHMARK(BM_ConstantCohomology)->Arg(0)->Arg(1);
BENCHMARK_MAIN();
