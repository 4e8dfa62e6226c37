#include <benchmark/benchmark.h>

#include "exemplar/engine.hpp"
#include "exemplar/synthetic.hpp"

namespace {

using namespace exemplar;

std::shared_ptr<const Engine> engine() {
    static const auto e = Engine::build(generate_synthetic_corpus(3, 1000, 48, 30), config::EngineConfig{});
    return e;
}

const std::vector<MemberId> kIdeal{"m0010", "m0020"};

void BM_BuildQuery(benchmark::State& state) {
    const auto e = engine();
    for (auto _ : state) benchmark::DoNotOptimize(e->build_query(kIdeal));
}
BENCHMARK(BM_BuildQuery);

void BM_Retrieve(benchmark::State& state) {
    const auto e = engine();
    const auto q = e->build_query(kIdeal);
    for (auto _ : state) benchmark::DoNotOptimize(index::retrieve(e->index(), q));
}
BENCHMARK(BM_Retrieve);

void BM_RankResults(benchmark::State& state) {
    const auto e = engine();
    const auto q = e->build_query(kIdeal);
    const auto candidates = index::retrieve(e->index(), q);
    const auto ctx = e->ranking_context();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ranking::rank_results(candidates, q, "m0000", kIdeal, 2, ctx, 25));
    }
    state.counters["candidates"] = static_cast<double>(candidates.size());
}
BENCHMARK(BM_RankResults)->Unit(benchmark::kMillisecond);

void BM_Suggest(benchmark::State& state) {
    const auto e = engine();
    const auto q = e->build_query(kIdeal);
    for (auto _ : state) benchmark::DoNotOptimize(e->suggest(q));
}
BENCHMARK(BM_Suggest);

}  // namespace
