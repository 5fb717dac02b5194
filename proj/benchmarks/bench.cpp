#include <benchmark/benchmark.h>

#include <cstdint>

#include "automult/characters.hpp"
#include "automult/classify.hpp"
#include "automult/fixtures.hpp"
#include "automult/ggp.hpp"

using namespace automult;

namespace {

void BM_EvalSmall(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-2-4-neg");
    std::uint64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.eval_u64(n));
        n = n % 1000000 + 1;
    }
}
BENCHMARK(BM_EvalSmall);

void BM_EvalBig(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-2-4-neg");
    Int n = 1;
    for (long i = 0; i < state.range(0); ++i) n *= 3;
    for (auto _ : state) benchmark::DoNotOptimize(d.eval(n));
}
BENCHMARK(BM_EvalBig)->Arg(100)->Arg(1000);

void BM_BuildTable(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-3-3-zeta");
    for (auto _ : state)
        benchmark::DoNotOptimize(build_table(d, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BuildTable)->Arg(10000)->Arg(100000);

void BM_Kernel(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-2-4-neg");
    for (auto _ : state) benchmark::DoNotOptimize(k_kernel(d));
}
BENCHMARK(BM_Kernel);

void BM_Monoid(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-3-3-zeta");
    for (auto _ : state) benchmark::DoNotOptimize(transition_monoid(d));
}
BENCHMARK(BM_Monoid);

void BM_Characters(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(characters_mod(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_Characters)->Arg(16)->Arg(63)->Arg(100);

void BM_MockDfao(benchmark::State& state) {
    MockCharacter mc{3, 2, character_mod(9, 1), Value::root_of_unity(3, 1)};
    for (auto _ : state) benchmark::DoNotOptimize(mock_character_dfao(mc));
}
BENCHMARK(BM_MockDfao);

void BM_GgpEncode(benchmark::State& state) {
    Ggp g;
    g.base = 10;
    g.coeffs = {Rat(-1), Rat(1)};
    std::vector<unsigned long> alphas{static_cast<unsigned long>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(ggp_encode(g, alphas));
}
BENCHMARK(BM_GgpEncode)->Arg(6)->Arg(60)->Arg(600);

void BM_MultiplicativityScan(benchmark::State& state) {
    EvalTable t = build_table(fixture_dfao("mock-2-4-pos"),
                              static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_multiplicative(t, false));
}
BENCHMARK(BM_MultiplicativityScan)->Arg(100000);

void BM_Classify(benchmark::State& state) {
    const Dfao& d = fixture_dfao("mock-2-4-neg");
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(d, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Classify)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
