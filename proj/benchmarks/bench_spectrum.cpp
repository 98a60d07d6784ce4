#include "rlwstab/floquet.hpp"
#include "rlwstab/linalg.hpp"
#include "rlwstab/rbou.hpp"

#include <benchmark/benchmark.h>

using namespace rlwstab;

namespace {

floquet::SpectrumRequest request(int nk)
{
    floquet::SpectrumRequest req{rbou::make_wave({-2.034, 0.7131, 1.0}), nk, {0.25}, false};
    return req;
}

void BM_collocation_build(benchmark::State& state)
{
    const auto req = request(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(floquet::build_collocation_matrix(req, 0.25));
}
BENCHMARK(BM_collocation_build)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

// one τ slice: build plus eigensolve
void BM_spectrum_slice(benchmark::State& state)
{
    const auto req = request(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(floquet::compute_spectrum(req));
}
BENCHMARK(BM_spectrum_slice)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace
