#include <benchmark/benchmark.h>

#include "exemplar/careersim.hpp"
#include "exemplar/synthetic.hpp"

namespace {

using namespace exemplar;

void BM_Align(benchmark::State& state) {
    const auto corpus = generate_synthetic_corpus(1, 200, 48, 30);
    std::vector<careersim::Trajectory> ts;
    for (const auto& [id, p] : corpus.profiles) ts.push_back(careersim::to_trajectory(p, corpus.as_of));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = ts[i % ts.size()];
        const auto& b = ts[(i * 7 + 3) % ts.size()];
        benchmark::DoNotOptimize(careersim::align(a, b, {}, {}));
        ++i;
    }
}
BENCHMARK(BM_Align);

// Alignment cost grows with the product of the lengths.
void BM_AlignLength(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    careersim::Trajectory a, b;
    for (int k = 0; k < n; ++k) {
        a.push_back({"c" + std::to_string(k % 5), "t" + std::to_string(k % 3), "i", 12 + k, {"x", "y"}});
        b.push_back({"c" + std::to_string((k + 1) % 5), "t" + std::to_string(k % 4), "i", 10 + k, {"y", "z"}});
    }
    for (auto _ : state) benchmark::DoNotOptimize(careersim::align(a, b, {}, {}));
    state.SetComplexityN(n);
}
BENCHMARK(BM_AlignLength)->RangeMultiplier(2)->Range(2, 64)->Complexity(benchmark::oNSquared);

}  // namespace
