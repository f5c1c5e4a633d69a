#include <benchmark/benchmark.h>

#include "agolomb/analysis.hpp"
#include "agolomb/correctors.hpp"
#include "agolomb/identities.hpp"
#include "agolomb/structure.hpp"

using namespace agolomb;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_Generate(benchmark::State& state) {
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_almost_golomb(3, N));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * N));
}
BENCHMARK(BM_Generate)->Arg(1 << 16)->Arg(1 << 20);

void BM_DefiningProperty(benchmark::State& state) {
    const Sequence a = generate_almost_golomb(5, 1 << 20);
    for (auto _ : state) benchmark::DoNotOptimize(verify_defining_property(a, 5, exec_of(state)));
}
BENCHMARK(BM_DefiningProperty)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckR3(benchmark::State& state) {
    const Sequence a = generate_almost_golomb(3, 1000000);
    const CorrectorSet eps = make_correctors(3, Method::recurrence, a.size() / 3 + 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_r3(a, eps, exec_of(state)));
}
BENCHMARK(BM_CheckR3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Correctors(benchmark::State& state) {
    const auto m = static_cast<Method>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(make_correctors(5, m, 100000, nullptr, DfaoSource::recurrence, Exec::serial));
}
BENCHMARK(BM_Correctors)
    ->Arg(static_cast<int>(Method::recurrence))
    ->Arg(static_cast<int>(Method::dfao))
    ->Unit(benchmark::kMillisecond);

void BM_Cesaro(benchmark::State& state) {
    const Sequence a = generate_almost_golomb(2, std::size_t{3} << 21);
    for (auto _ : state) benchmark::DoNotOptimize(cesaro_r2(a, 22, 3, 16, exec_of(state)));
}
BENCHMARK(BM_Cesaro)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Meta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(meta_structure(100, 0, 4, exec_of(state)));
}
BENCHMARK(BM_Meta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
