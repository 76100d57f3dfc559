#include <benchmark/benchmark.h>

#include "semitrans/geometry_core.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/tangency.hpp"

using namespace semitrans;

namespace {

void BM_gauge(benchmark::State& state) {
    const NormModel models[] = {make_lp(4.0), make_grandpa_pig(), make_splicing(), make_polygon({{1, 0}, {0.5, 0.8}, {-0.5, 0.8}, {-1, 0}, {-0.5, -0.8}, {0.5, -0.8}})};
    const NormModel& m = models[state.range(0)];
    state.SetLabel(m.label());
    double t = 0.0;
    for (auto _ : state) {
        t += 0.001;
        benchmark::DoNotOptimize(m.gauge({std::cos(t), 0.7 * std::sin(t)}));
    }
}
BENCHMARK(BM_gauge)->DenseRange(0, 3);

void BM_operator_norm(benchmark::State& state) {
    const auto m = make_grandpa_pig();
    const LinearMap2 T{0.9, 0.2, -0.1, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m, T).value);
}
BENCHMARK(BM_operator_norm)->Unit(benchmark::kMicrosecond);

void BM_delta_uc(benchmark::State& state) {
    const auto m = make_lp(3.0);
    for (auto _ : state) benchmark::DoNotOptimize(delta_uc(m, 0.5));
}
BENCHMARK(BM_delta_uc)->Unit(benchmark::kMicrosecond);

void BM_john_ellipse(benchmark::State& state) {
    for (auto _ : state) {
        // fresh model each time: the ellipse is cached per model
        state.PauseTiming();
        const auto m = make_splicing();
        state.ResumeTiming();
        benchmark::DoNotOptimize(john_ellipse(m).M.a);
    }
}
BENCHMARK(BM_john_ellipse)->Unit(benchmark::kMillisecond);

void BM_discs(benchmark::State& state) {
    const auto m = make_splicing();
    const SpherePoint x = m.sphere_point(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inner_disc(m, x));
        benchmark::DoNotOptimize(outer_disc(m, x));
    }
}
BENCHMARK(BM_discs)->Unit(benchmark::kMicrosecond);

}  // namespace
