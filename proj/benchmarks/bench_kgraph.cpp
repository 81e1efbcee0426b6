#include <benchmark/benchmark.h>

#include "kgraph/analysis.hpp"
#include "kgraph/fixtures.hpp"

using namespace kgraph;

namespace {

const KGraph& graph(std::string_view name) {
    static const KGraph t2 = KGraph::build(fixture("T2"));
    static const KGraph f = KGraph::build(fixture("F"));
    static const KGraph d = KGraph::build(fixture("D"));
    static const KGraph d2 = KGraph::build(fixture("D2"));
    if (name == "T2") return t2;
    if (name == "F") return f;
    if (name == "D") return d;
    return d2;
}

void BM_FactorLongPath(benchmark::State& state) {
    const KGraph& g = graph("D2");
    const auto len = static_cast<std::uint32_t>(state.range(0));
    const Path lambda = g.paths_from(g.skeleton().vertex("u"), {len, len}).back();
    for (auto _ : state) {
        auto parts = g.factor(lambda, {len / 2, len - len / 2});
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(BM_FactorLongPath)->Arg(2)->Arg(4)->Arg(6);

void BM_LocalPeriodicity(benchmark::State& state) {
    const KGraph& g = graph("D2");
    const VertexIndex w = g.skeleton().vertex("w");
    const auto c = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(local_periodicity_at(g, w, {c, 0}, {0, c}));
}
BENCHMARK(BM_LocalPeriodicity)->Arg(1)->Arg(2)->Arg(3);

void BM_ScanAperiodicity(benchmark::State& state) {
    const KGraph& g = graph("D2");
    const ScanOptions options{.bound = static_cast<std::uint32_t>(state.range(0)),
                              .jobs = static_cast<unsigned>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(scan_aperiodicity(g, options));
}
BENCHMARK(BM_ScanAperiodicity)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_SamplesAndAnnihilation(benchmark::State& state) {
    const KGraph& g = graph("T2");
    const auto t = periodicity_tuple(g, VertexIndex{0}, {1, 0}, {0, 1});
    const RepElement a = rep_element(g, t);
    const auto depth = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_annihilation(g, a, ep_samples(g, depth)));
}
BENCHMARK(BM_SamplesAndAnnihilation)->Arg(2)->Arg(3);

void BM_AllIdeals(benchmark::State& state) {
    const KGraph& g = graph("D2");
    for (auto _ : state) benchmark::DoNotOptimize(all_ideals_gauge_invariant(g, {.bound = 2}));
}
BENCHMARK(BM_AllIdeals)->Unit(benchmark::kMillisecond);

void BM_CofinalityOracle(benchmark::State& state) {
    const KGraph& g = graph("D2");
    const auto depth = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cofinality_oracle(g, depth));
}
BENCHMARK(BM_CofinalityOracle)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
