#include <benchmark/benchmark.h>

#include "semitrans/classify.hpp"
#include "semitrans/semigroup.hpp"

using namespace semitrans;

namespace {

void BM_classify_st(benchmark::State& state) {
    const NormModel models[] = {make_euclidean(), make_splicing(), make_lp(4.0)};
    const NormModel& m = models[state.range(0)];
    state.SetLabel(m.label());
    for (auto _ : state) benchmark::DoNotOptimize(classify_st(m).kind);
}
BENCHMARK(BM_classify_st)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_orbit_map(benchmark::State& state) {
    const auto m = make_splicing();
    const SpherePoint x = m.sphere_point(0.3), y = m.sphere_point(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_map(m, x, y));
}
BENCHMARK(BM_orbit_map)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
