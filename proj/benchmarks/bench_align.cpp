#include <benchmark/benchmark.h>

#include "mmsaa/evalbench.hpp"
#include "mmsaa/pipeline.hpp"
#include "mmsaa/suffix_tree.hpp"

using namespace mmsaa;

namespace {

std::tuple<Sequence, Sequence, ExonAnnotation> make_pair(int64_t length) {
    evalbench::MutationModel model;
    model.substitution_rate = 0.05;
    model.indel_rate = 0.01;
    model.rng_seed = 42;
    return evalbench::generate_pair(length, model);
}

void BM_TreeBuild(benchmark::State& state) {
    auto [s1, s2, ann] = make_pair(state.range(0));
    for (auto _ : state) {
        GeneralizedSuffixTree tree(s1.residues, s2.residues);
        benchmark::DoNotOptimize(tree.node_count());
    }
    state.SetBytesProcessed(state.iterations() * (s1.size() + s2.size()));
}
BENCHMARK(BM_TreeBuild)->Arg(10000)->Arg(100000)->Arg(500000);

void BM_MmssEnumeration(benchmark::State& state) {
    auto [s1, s2, ann] = make_pair(state.range(0));
    GeneralizedSuffixTree tree(s1.residues, s2.residues);
    for (auto _ : state) {
        auto mmss = tree.enumerate_mmss(10);
        benchmark::DoNotOptimize(mmss.size());
    }
}
BENCHMARK(BM_MmssEnumeration)->Arg(10000)->Arg(100000);

void BM_AlignPair(benchmark::State& state) {
    auto [s1, s2, ann] = make_pair(state.range(0));
    PipelineConfig config;
    for (auto _ : state) {
        auto rec = align_pair(s1, s2, config);
        benchmark::DoNotOptimize(rec.score);
    }
    state.SetBytesProcessed(state.iterations() * (s1.size() + s2.size()));
}
BENCHMARK(BM_AlignPair)->Arg(2000)->Arg(20000)->Arg(100000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
