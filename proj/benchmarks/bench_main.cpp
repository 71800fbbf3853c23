#include <benchmark/benchmark.h>

#include "seqcomp/builtin.hpp"
#include "seqcomp/constructions.hpp"
#include "seqcomp/correlation.hpp"
#include "seqcomp/seeds.hpp"

using namespace seqcomp;

namespace {

void BM_accf(benchmark::State& state) {
    const GolayPair p = golay_pair(static_cast<std::size_t>(state.range(0)));
    const long tau = static_cast<long>(p.length()) / 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(accf(p.a, p.b, tau));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_accf)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

void BM_cyc_is_zero(benchmark::State& state) {
    const std::uint32_t q = static_cast<std::uint32_t>(state.range(0));
    CyclotomicSum s(q);
    for (std::uint32_t k = 0; k < q; ++k) s.add_term(k, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(cyc_is_zero(s));
}
BENCHMARK(BM_cyc_is_zero)->Arg(2)->Arg(6)->Arg(12)->Arg(30);

void BM_classify_table1(benchmark::State& state) {
    const SetFamily family = builtin::table1_family();
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(family));
}
BENCHMARK(BM_classify_table1);

void BM_build_zccs(benchmark::State& state) {
    const Theorem2Params params = builtin::table1_params();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_zccs_theorem2(params, VerifyPolicy::never));
}
BENCHMARK(BM_build_zccs);

void BM_ccc_theorem4(benchmark::State& state) {
    const SetFamily a = seed_ccc(2);
    const SetFamily b = seed_ccc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ccc_theorem4(a, b, VerifyPolicy::never));
}
BENCHMARK(BM_ccc_theorem4)->Arg(2)->Arg(10)->Arg(26);

void BM_is_ccc_seed(benchmark::State& state) {
    const SetFamily f = seed_ccc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_ccc(f));
}
BENCHMARK(BM_is_ccc_seed)->Arg(10)->Arg(26)->Arg(104);

} // namespace

BENCHMARK_MAIN();
