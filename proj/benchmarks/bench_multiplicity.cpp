#include "dfs/cg_oracle.hpp"
#include "dfs/multiplicity.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BuildTable(benchmark::State &state) {
    const int n_max = static_cast<int>(state.range(0));
    const int l_max = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto table = dfs::build_table(n_max, l_max);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BuildTable)->Args({4, 8})->Args({10, 20})->Args({20, 40})->Args({40, 80});

void BM_OracleMultiplicities(benchmark::State &state) {
    const dfs::SectorIndex sector(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto irreps = dfs::oracle_multiplicities(sector);
        benchmark::DoNotOptimize(irreps);
    }
}
BENCHMARK(BM_OracleMultiplicities)->Args({4, 8})->Args({6, 10})->Args({8, 8});

void BM_WeightCount(benchmark::State &state) {
    const dfs::SectorIndex sector(16, 32);
    for (auto _ : state) {
        for (int m = 0; m <= 32; ++m) {
            auto w = dfs::weight_count(sector, m);
            benchmark::DoNotOptimize(w);
        }
    }
}
BENCHMARK(BM_WeightCount);

} // namespace
