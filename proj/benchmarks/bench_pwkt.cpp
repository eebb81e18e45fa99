#include <benchmark/benchmark.h>

#include <random>

#include "pwkt/exactlin.hpp"

namespace {

pwkt::MatrixQ random_matrix(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    pwkt::MatrixQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = pwkt::rat(num(rng), den(rng));
    return m;
}

void BM_rref(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pwkt::MatrixQ m = random_matrix(n, n, 42u);
    for (auto _ : state) {
        auto r = pwkt::rref(m);
        benchmark::DoNotOptimize(r.first);
    }
}

}  // namespace

BENCHMARK(BM_rref)->Arg(20)->Arg(60)->Arg(120);

BENCHMARK_MAIN();
