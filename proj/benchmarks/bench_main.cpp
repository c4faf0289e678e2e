#include "arrlab/accuracy.hpp"
#include "arrlab/deformations.hpp"
#include "arrlab/experiments.hpp"
#include "arrlab/freeness.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/poset.hpp"
#include "arrlab/roots.hpp"

#include <benchmark/benchmark.h>

using namespace arrlab;

namespace {

Arrangement shi_cone(const char* base, Int m) {
    DeformationSpec s;
    s.family = Family::ExtShi;
    s.base = base;
    s.m = m;
    return cone(build(s).arrangement);
}

void BM_PosetWeyl(benchmark::State& state) {
    static const char* bases[] = {"A3", "B3", "A4", "B4", "D4"};
    Arrangement a = weyl_arrangement(build_root_system(bases[state.range(0)]));
    for (auto _ : state)
        benchmark::DoNotOptimize(IntersectionPoset::build(a).size());
    state.SetLabel(bases[state.range(0)]);
}
BENCHMARK(BM_PosetWeyl)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CharPolyShiCone(benchmark::State& state) {
    Arrangement a = shi_cone("A3", state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(char_poly(a));
    state.counters["hyperplanes"] = static_cast<double>(a.size());
}
BENCHMARK(BM_CharPolyShiCone)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CertifyFree(benchmark::State& state) {
    Arrangement a = shi_cone("A2", state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(certified(certify_free(a)));
}
BENCHMARK(BM_CertifyFree)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_GraphicAccuracy(benchmark::State& state) {
    SimpleGraph g = build_q4_ext(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(graphic_accuracy(g).flag);
}
BENCHMARK(BM_GraphicAccuracy)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_FlagAccuracyWeyl(benchmark::State& state) {
    Arrangement a = weyl_arrangement(build_root_system("B4"));
    for (auto _ : state)
        benchmark::DoNotOptimize(flag_accuracy(a).has_value());
}
BENCHMARK(BM_FlagAccuracyWeyl)->Unit(benchmark::kMillisecond);

void BM_ManifestJob(benchmark::State& state) {
    static const char* names[] = {"graph-sweep-6", "ideals-B3", "shi-matrix-l3-m1-d0", "nish-nested"};
    Manifest m = builtin_manifest("desk-scale");
    RunOptions options;
    options.write = false;
    options.only = {names[state.range(0)]};
    for (auto _ : state)
        benchmark::DoNotOptimize(run_manifest(m, options).front().status);
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_ManifestJob)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
