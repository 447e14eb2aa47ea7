#include <benchmark/benchmark.h>

#include <random>

#include "gfsuper/sparse_matrix.hpp"

using gfsuper::Rational;
using gfsuper::SparseMatrix;

static SparseMatrix random_sparse(unsigned n, int per_row, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> val(-5, 5);
    std::uniform_int_distribution<unsigned> col(0, n - 1);
    SparseMatrix m(n, n);
    for (unsigned r = 0; r < n; ++r)
        for (int k = 0; k < per_row; ++k) {
            int v = val(rng);
            if (v != 0) m.set(r, col(rng), Rational(v));
        }
    return m;
}

static void BM_RankSparse(benchmark::State& state) {
    auto n = static_cast<unsigned>(state.range(0));
    auto m = random_sparse(n, 6, 12345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RankSparse)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_RankHilbert(benchmark::State& state) {
    auto n = static_cast<unsigned>(state.range(0));
    SparseMatrix h(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) h.set(i, j, Rational(1, i + j + 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h.rank());
    }
}
BENCHMARK(BM_RankHilbert)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
