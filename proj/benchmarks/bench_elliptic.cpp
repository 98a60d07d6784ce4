#include "rlwstab/elliptic.hpp"
#include "rlwstab/hill.hpp"

#include <benchmark/benchmark.h>

using namespace rlwstab;

namespace {

void BM_complete_K(benchmark::State& state)
{
    const elliptic::Parameter m(0.9);
    for (auto _ : state)
        benchmark::DoNotOptimize(elliptic::complete_K(m));
}
BENCHMARK(BM_complete_K);

void BM_jacobi_sn_cn_dn(benchmark::State& state)
{
    const elliptic::Parameter m(0.9);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptic::jacobi_sn_cn_dn(x, m));
        x += 0.01;
    }
}
BENCHMARK(BM_jacobi_sn_cn_dn);

void BM_sn2_fourier(benchmark::State& state)
{
    const elliptic::Parameter m(0.9);
    for (auto _ : state)
        benchmark::DoNotOptimize(elliptic::sn2_fourier(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_sn2_fourier)->Arg(64)->Arg(256);

void BM_lame_edges(benchmark::State& state)
{
    const elliptic::Parameter m(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(hill::lame_edges_rbou(m));
}
BENCHMARK(BM_lame_edges)->Unit(benchmark::kMillisecond);

} // namespace
