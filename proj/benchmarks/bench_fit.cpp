#include <benchmark/benchmark.h>

#include "aaa/demos.hpp"
#include "aaa/fit.hpp"
#include "aaa/linalg.hpp"
#include "aaa/point_sets.hpp"

namespace {

void BM_FitDemo(benchmark::State& state, const char* name) {
    const auto& spec = aaa::find_demo(name);
    const auto samples = aaa::demo_samples(spec);
    for (auto _ : state) benchmark::DoNotOptimize(aaa::fit(samples, spec.defaults));
}
BENCHMARK_CAPTURE(BM_FitDemo, spiral_tan, "spiral-tan")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FitDemo, froissart, "froissart")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FitDemo, tan_256, "tan-256")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FitDemo, sign, "sign")->Unit(benchmark::kMillisecond);

// Fixed m = 30, growing M: the per-step cost should scale linearly in M.
void BM_FitSampleCount(benchmark::State& state) {
    const auto z = aaa::points::unit_circle(static_cast<std::size_t>(state.range(0)));
    std::vector<aaa::Complex> f;
    for (auto t : z) f.push_back(std::exp(t) / (1.2 - t));
    const aaa::SampleSet samples(z, f);
    aaa::FitConfig cfg;
    cfg.tol = 0.0;
    cfg.mmax = 30;
    cfg.cleanup_enabled = false;
    for (auto _ : state) benchmark::DoNotOptimize(aaa::fit(samples, cfg));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitSampleCount)->RangeMultiplier(2)->Range(500, 8000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
    const auto& spec = aaa::find_demo("tan-256");
    const auto r = aaa::fit(aaa::demo_samples(spec), spec.defaults).approximant;
    const auto z = aaa::points::rectangle_random(10000, 7);
    for (auto _ : state) benchmark::DoNotOptimize(r.evaluate(z));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(z.size()));
}
BENCHMARK(BM_Evaluate);

void BM_Poles(benchmark::State& state) {
    const auto& spec = aaa::find_demo("tan-256");
    const auto r = aaa::fit(aaa::demo_samples(spec), spec.defaults).approximant;
    for (auto _ : state) benchmark::DoNotOptimize(aaa::poles(r));
}
BENCHMARK(BM_Poles)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
