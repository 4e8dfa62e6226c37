#include <benchmark/benchmark.h>

#include "exemplar/expertise.hpp"
#include "exemplar/synthetic.hpp"

namespace {

using namespace exemplar;

void BM_RawExpertise(benchmark::State& state) {
    const auto corpus = generate_synthetic_corpus(2, static_cast<std::size_t>(state.range(0)), 48, 30);
    for (auto _ : state) benchmark::DoNotOptimize(expertise::compute_raw_expertise(corpus, {}));
}
BENCHMARK(BM_RawExpertise)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
    const auto corpus = generate_synthetic_corpus(2, static_cast<std::size_t>(state.range(0)), 48, 30);
    const auto e0 = expertise::compute_raw_expertise(corpus, {});
    for (auto _ : state) benchmark::DoNotOptimize(expertise::factorize(e0, {}));
}
BENCHMARK(BM_Factorize)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Infer(benchmark::State& state) {
    const auto corpus = generate_synthetic_corpus(2, 1000, 48, 30);
    const expertise::ExpertiseConfig cfg;
    const auto e0 = expertise::compute_raw_expertise(corpus, cfg);
    const auto fz = expertise::factorize(e0, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(expertise::infer_expertise(e0, fz.factors, cfg));
}
BENCHMARK(BM_Infer)->Unit(benchmark::kMillisecond);

}  // namespace
