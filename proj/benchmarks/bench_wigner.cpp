#include "dfs/channel.hpp"
#include "dfs/wigner.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_WignerD(benchmark::State &state) {
    const auto branch = dfs::decompose_u2(dfs::haar_sample_u2(1));
    const dfs::SpinLabel j(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto block = dfs::wigner_d(j, branch);
        benchmark::DoNotOptimize(block);
    }
}
BENCHMARK(BM_WignerD)->Arg(2)->Arg(8)->Arg(16)->Arg(32);

void BM_DecomposeU2(benchmark::State &state) {
    const dfs::UnitaryU2 omega = dfs::haar_sample_u2(2);
    for (auto _ : state) {
        auto branch = dfs::decompose_u2(omega);
        benchmark::DoNotOptimize(branch);
    }
}
BENCHMARK(BM_DecomposeU2);

} // namespace
