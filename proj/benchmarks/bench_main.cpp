// Microbenchmarks for the hot paths: presentation search, constraint
// propagation, the obstruction saturation, and exhaustive enumeration.
// Wall-clock numbers are machine-dependent; these exist to catch order-of-
// magnitude regressions, not to certify absolute speed.

#include <benchmark/benchmark.h>

#include "quandlekit/quandlekit.hpp"

using namespace quandlekit;

namespace {

QuandleMatrix example4() {
    return validate_quandle({{1, 4, 4, 1}, {3, 2, 2, 3}, {2, 3, 3, 2}, {4, 1, 1, 4}}).value();
}

void BM_ValidateQuandle(benchmark::State& state) {
    const auto rows = dihedral_quandle(static_cast<int>(state.range(0))).table().rows();
    for (auto _ : state) benchmark::DoNotOptimize(validate_quandle(rows));
}
BENCHMARK(BM_ValidateQuandle)->Arg(5)->Arg(15)->Arg(31);

void BM_PresentationSearch_Example(benchmark::State& state) {
    const auto q = example4();
    for (auto _ : state) benchmark::DoNotOptimize(alexander_presentations(q));
}
BENCHMARK(BM_PresentationSearch_Example);

void BM_PresentationSearch_Trivial(benchmark::State& state) {
    const auto q = trivial_quandle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alexander_presentations(q));
}
BENCHMARK(BM_PresentationSearch_Trivial)->Arg(4)->Arg(5)->Arg(6);

void BM_PresentationSearch_Dihedral(benchmark::State& state) {
    const auto q = dihedral_quandle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alexander_presentations(q));
}
BENCHMARK(BM_PresentationSearch_Dihedral)->Arg(3)->Arg(5)->Arg(7);

void BM_LemmaFixpoint(benchmark::State& state) {
    const auto q = dihedral_quandle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto partial = seed_partial(q);
        benchmark::DoNotOptimize(apply_lemma_constraints(q, partial));
    }
}
BENCHMARK(BM_LemmaFixpoint)->Arg(5)->Arg(9)->Arg(15);

void BM_ZeroFill(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zero_fill(PartialCayley(n)));
}
BENCHMARK(BM_ZeroFill)->Arg(4)->Arg(6)->Arg(8);

void BM_Obstruction(benchmark::State& state) {
    const auto q = validate_quandle({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}).value();
    for (auto _ : state) benchmark::DoNotOptimize(obstruction_check(q));
}
BENCHMARK(BM_Obstruction);

void BM_Obstruction_Trivial(benchmark::State& state) {
    const auto q = trivial_quandle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(obstruction_check(q));
}
BENCHMARK(BM_Obstruction_Trivial)->Arg(8)->Arg(16)->Arg(31);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_quandles(n));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Arg(5);

void BM_CountHoms(benchmark::State& state) {
    const auto d3 = dihedral_quandle(3);
    const auto d5 = dihedral_quandle(5);
    for (auto _ : state) benchmark::DoNotOptimize(count_homs(d3, d5));
}
BENCHMARK(BM_CountHoms);

}  // namespace

BENCHMARK_MAIN();
