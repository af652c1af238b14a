#include <benchmark/benchmark.h>

#include "klab/circles.hpp"
#include "klab/connection.hpp"
#include "klab/curvature.hpp"
#include "klab/metrics.hpp"

using namespace klab;

namespace {

const Point4 kPoint{0.3, -0.1, 0.2, 0.15};
const Point4 kVelocity{0.6, 0.4, -0.5, 0.2};

void BM_MetricEvaluate(benchmark::State& state) {
    const MetricField g = fubini_metric(1.0);
    for (auto _ : state) {
        Mat4 m = g.eval_fn(kPoint);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MetricEvaluate);

void BM_Christoffel(benchmark::State& state) {
    const MetricField g = fubini_metric(1.0);
    for (auto _ : state) {
        ChristoffelData c = christoffel(g, kPoint);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Christoffel);

void BM_GeodesicStep(benchmark::State& state) {
    const MetricField g = fubini_metric(1.0);
    for (auto _ : state) {
        Point4 a = geodesic_accel(g, kPoint, kVelocity);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_GeodesicStep);

void BM_Geodesic(benchmark::State& state) {
    const MetricField g = fubini_metric(1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Trajectory t = geodesic(g, kPoint, kVelocity, 1.0, n);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Geodesic)->RangeMultiplier(4)->Range(64, 2048)->Complexity(benchmark::oN);

void BM_FitCircle(benchmark::State& state) {
    const auto pts = sample_circle({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, 2.0,
                                   static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CircleFit fit = fit_circle(pts);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitCircle)->Arg(64)->Arg(512)->Arg(2048);

void BM_HolomorphicSectionalCurvature(benchmark::State& state) {
    const MetricField g = fubini_metric(-1.0);
    for (auto _ : state) {
        double k = hsc(g, kPoint, kVelocity);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_HolomorphicSectionalCurvature);

} // namespace

BENCHMARK_MAIN();
