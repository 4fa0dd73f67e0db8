#include <benchmark/benchmark.h>

#include "coralarm/enumeration.hpp"
#include "coralarm/genfun.hpp"
#include "coralarm/pip.hpp"
#include "coralarm/planner.hpp"

using namespace coralarm;

static void BM_EnumerateStates(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(2, n));
}
BENCHMARK(BM_EnumerateStates)->Arg(8)->Arg(10)->Arg(12);

static void BM_EnumerateCubes(benchmark::State& state) {
    TransitionGraph g = enumerate_states(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubes(g));
}
BENCHMARK(BM_EnumerateCubes)->Arg(8)->Arg(10);

static void BM_Distance(benchmark::State& state) {
    ArmState a = parse_state("rruuurddrurdrurddrurrrr", 3);
    ArmState b = parse_state("rurrururrdrrddrrurdrurd", 3);
    for (auto _ : state) benchmark::DoNotOptimize(distance_edge(a, b));
}
BENCHMARK(BM_Distance);

static void BM_GeodesicEdge(benchmark::State& state) {
    ArmState a = parse_state("rruuurddrurdrurddrurrrr", 3);
    ArmState b = parse_state("rurrururrdrrddrrurdrurd", 3);
    for (auto _ : state) benchmark::DoNotOptimize(geodesic_edge(a, b));
}
BENCHMARK(BM_GeodesicEdge);

static void BM_BuildCoralPip(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_coral_pip(2, n));
}
BENCHMARK(BM_BuildCoralPip)->Arg(6)->Arg(8);

static void BM_NormalCubePath(benchmark::State& state) {
    int n = 8;
    CoralPip cp = build_coral_pip(2, n);
    ArmState a = horizontal_position(2, n);
    ArmState b = zigzag_position(2, n);
    for (auto _ : state) benchmark::DoNotOptimize(normal_cube_path(cp, a, b));
}
BENCHMARK(BM_NormalCubePath);

static void BM_SeriesCoeffs(benchmark::State& state) {
    RationalGF c = gf_cubes();
    for (auto _ : state) benchmark::DoNotOptimize(series_coeffs(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesCoeffs)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
