#include <benchmark/benchmark.h>

#include "gfsuper/cochain_complex.hpp"

using gfsuper::CochainComplex;
using gfsuper::gl_coefficient_cohomology;
using gfsuper::parse_partition;
using gfsuper::vfield_cohomology;

// Full pipeline: enumerate the weight-zero blocks, assemble the
// differentials and take ranks. range(0) is the top degree.
static void BM_VfieldBetti11(benchmark::State& state) {
    int P = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vfield_cohomology(1, 1, P));
    }
}
BENCHMARK(BM_VfieldBetti11)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_VfieldBetti21(benchmark::State& state) {
    int P = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vfield_cohomology(2, 1, P));
    }
}
BENCHMARK(BM_VfieldBetti21)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GlCoefficientBetti(benchmark::State& state) {
    int P = static_cast<int>(state.range(0));
    auto lambda = parse_partition("1,1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(gl_coefficient_cohomology(2, lambda, P));
    }
}
BENCHMARK(BM_GlCoefficientBetti)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Character-restricted variant of the same computation; the dropped blocks
// are acyclic, so the tables agree while the matrices shrink.
static void BM_GlZeroCharacter(benchmark::State& state) {
    int P = static_cast<int>(state.range(0));
    auto lambda = parse_partition("1,1");
    CochainComplex::Options zc;
    zc.zero_character_only = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gl_coefficient_cohomology(2, lambda, P, zc));
    }
}
BENCHMARK(BM_GlZeroCharacter)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
