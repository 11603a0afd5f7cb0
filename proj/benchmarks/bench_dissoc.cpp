#include <benchmark/benchmark.h>

#include <random>

#include "dissoc/canonical.hpp"
#include "dissoc/dissoc_count.hpp"
#include "dissoc/families.hpp"
#include "dissoc/generate.hpp"
#include "dissoc/verify.hpp"

using namespace dissoc;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

void BM_count_brute_path(benchmark::State& state) {
    Graph g = make_standard(StandardKind::path, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_brute(g));
}
BENCHMARK(BM_count_brute_path)->Arg(16)->Arg(20)->Arg(24);

void BM_count_recursive_path(benchmark::State& state) {
    Graph g = make_standard(StandardKind::path, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MemoTable memo;
        benchmark::DoNotOptimize(count_recursive(g, memo));
    }
}
BENCHMARK(BM_count_recursive_path)->Arg(24)->Arg(64)->Arg(126);

void BM_count_recursive_extremal(benchmark::State& state) {
    Graph g = make_F(static_cast<int>(state.range(0)))[0];
    for (auto _ : state) {
        MemoTable memo;
        benchmark::DoNotOptimize(count_recursive(g, memo));
    }
}
BENCHMARK(BM_count_recursive_extremal)->Arg(16)->Arg(32)->Arg(64);

void BM_count_recursive_random(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 99);
    for (auto _ : state) {
        MemoTable memo;
        benchmark::DoNotOptimize(count_recursive(g, memo));
    }
}
BENCHMARK(BM_count_recursive_random)->Arg(10)->Arg(14)->Arg(18);

void BM_canonical_tree(benchmark::State& state) {
    std::mt19937_64 rng(5);
    Graph g = random_tree(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_canonical_tree)->Arg(18)->Arg(64)->Arg(126);

void BM_canonical_search(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_canonical_search)->Arg(8)->Arg(10)->Arg(12);

void BM_generate_trees(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_trees(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_generate_trees)->Arg(10)->Arg(12)->Arg(14);

void BM_generate_unicyclic(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_unicyclic(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_generate_unicyclic)->Arg(8)->Arg(10);

void BM_rank_trees(benchmark::State& state) {
    std::vector<Graph> trees = generate_trees(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_graphs(trees, 2, 1));
}
BENCHMARK(BM_rank_trees)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
