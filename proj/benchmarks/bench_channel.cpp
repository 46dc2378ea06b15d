#include "dfs/channel.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SectorUnitary(benchmark::State &state) {
    const dfs::SectorIndex sector(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(1)));
    const dfs::UnitaryU2 omega = dfs::haar_sample_u2(3);
    for (auto _ : state) {
        auto u = dfs::sector_unitary(sector, omega);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_SectorUnitary)->Args({2, 4})->Args({3, 4})->Args({3, 6});

void BM_CommutantDimension(benchmark::State &state) {
    const dfs::SectorIndex sector(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(1)));
    for (auto _ : state) {
        const int dim = dfs::commutant_dimension(sector, 3, 11);
        benchmark::DoNotOptimize(dim);
    }
}
BENCHMARK(BM_CommutantDimension)->Args({2, 2})->Args({2, 4})->Args({3, 3});

void BM_HaarSampler(benchmark::State &state) {
    dfs::HaarSampler sampler(4);
    for (auto _ : state) {
        auto omega = sampler.next();
        benchmark::DoNotOptimize(omega);
    }
}
BENCHMARK(BM_HaarSampler);

} // namespace
