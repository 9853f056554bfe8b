// Serial reference vs OpenMP kernels, plus the end-to-end ranking pipeline.
//
//   ./build/bench/frane_bench --benchmark_filter=Pearson

#include <random>

#include <benchmark/benchmark.h>

#include "frane/frane.hpp"
#include "frane/graph_rank.hpp"
#include "frane/similarity.hpp"

namespace {

frane::DataMatrix random_data(std::size_t m, std::size_t n) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> noise;
    std::vector<double> v(m * n);
    for (auto& x : v) x = noise(rng);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("f" + std::to_string(j));
    return {m, n, std::move(v), std::move(names)};
}

frane::Parallelism policy(const benchmark::State& state) { return {state.range(1) ? 0 : 1}; }

void BM_PearsonSimilarity(benchmark::State& state) {
    const auto x = random_data(100, static_cast<std::size_t>(state.range(0)));
    const auto par = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(frane::pearson_similarity(x, par));
    state.SetLabel(par.serial() ? "serial" : "omp");
}

void BM_EuclideanSimilarity(benchmark::State& state) {
    const auto x = random_data(100, static_cast<std::size_t>(state.range(0)));
    const auto par = policy(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(frane::distance_similarity(x, frane::SimilarityMeasure::euclidean, par));
    }
    state.SetLabel(par.serial() ? "serial" : "omp");
}

void BM_PageRankCompleteGraph(benchmark::State& state) {
    const auto x = random_data(100, static_cast<std::size_t>(state.range(0)));
    const auto w = frane::pearson_similarity(x);
    const auto edges = frane::build_edge_list(w);
    frane::ThresholdGraph g(w.size());
    g.advance_to(edges, 0.0);
    frane::PageRankOptions opt;
    opt.parallelism = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(frane::weighted_pagerank(g, opt));
    state.SetLabel(opt.parallelism.serial() ? "serial" : "omp");
}

void BM_RunFrane(benchmark::State& state) {
    const auto x = random_data(100, static_cast<std::size_t>(state.range(0)));
    frane::FraneConfig cfg;
    cfg.parallelism = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(frane::run_frane(x, cfg));
    state.SetLabel(cfg.parallelism.serial() ? "serial" : "omp");
}

}  // namespace

BENCHMARK(BM_PearsonSimilarity)->ArgsProduct({{250, 500, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EuclideanSimilarity)->ArgsProduct({{250, 500, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRankCompleteGraph)->ArgsProduct({{250, 500, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunFrane)->ArgsProduct({{250, 500}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
