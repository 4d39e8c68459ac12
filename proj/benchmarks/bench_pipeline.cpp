// Microbenchmarks for the hot paths: proximity matrices and the
// agglomerative clustering loop, on a moderate SBM instance.

#include <benchmark/benchmark.h>

#include "commkit/benchgen.hpp"
#include "commkit/hierclust.hpp"
#include "commkit/pipelines.hpp"
#include "commkit/proximity.hpp"

namespace {

commkit::Graph make_graph(int blocks, int size) {
    commkit::SbmSpec spec{static_cast<std::size_t>(blocks), static_cast<std::size_t>(size),
                          0.6, 0.1, 42};
    return commkit::generate_sbm(spec).graph;
}

void BM_WassermanFaust(benchmark::State& state) {
    const auto g = make_graph(5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commkit::wasserman_faust(g));
    }
}
BENCHMARK(BM_WassermanFaust)->Arg(10)->Arg(20);

void BM_Ppmi(benchmark::State& state) {
    const auto g = make_graph(5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commkit::ppmi(g, 1.0, 10));
    }
}
BENCHMARK(BM_Ppmi)->Arg(10)->Arg(20);

void BM_Katz(benchmark::State& state) {
    const auto g = make_graph(5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commkit::katz(g, 0.05));
    }
}
BENCHMARK(BM_Katz)->Arg(10)->Arg(20);

void BM_AverageLinkage(benchmark::State& state) {
    const auto g = make_graph(5, static_cast<int>(state.range(0)));
    const auto d = commkit::to_dissimilarity(commkit::wasserman_faust(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commkit::linkage_cluster(d.matrix, commkit::Linkage::average));
    }
}
BENCHMARK(BM_AverageLinkage)->Arg(10)->Arg(20);

void BM_Genie(benchmark::State& state) {
    const auto g = make_graph(5, static_cast<int>(state.range(0)));
    const auto d = commkit::to_dissimilarity(commkit::wasserman_faust(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commkit::genie_cluster(d.matrix, 0.3));
    }
}
BENCHMARK(BM_Genie)->Arg(10)->Arg(20);

}  // namespace
