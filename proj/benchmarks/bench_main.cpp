#include <benchmark/benchmark.h>

#include <random>

#include "qmc/algebra.hpp"
#include "qmc/characters.hpp"
#include "qmc/exact.hpp"
#include "qmc/lr.hpp"
#include "qmc/moment_sdp.hpp"
#include "qmc/tensor_oracle.hpp"

using namespace qmc;

static void BM_HamiltonianApply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    HamiltonianOperator h(GraphSpec::cycle(n), 2);
    std::vector<double> in(h.dim(), 1.0), out(h.dim());
    for (auto _ : state) {
        h.apply(in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * h.dim());
}
BENCHMARK(BM_HamiltonianApply)->Arg(8)->Arg(10)->Arg(12);

static void BM_DimSn(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n, n);
    for (auto _ : state)
        for (const Partition& p : parts) benchmark::DoNotOptimize(dim_sn(p));
}
BENCHMARK(BM_DimSn)->Arg(12)->Arg(20);

static void BM_Chi(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n, n);
    for (auto _ : state)
        for (const Partition& lambda : parts)
            benchmark::DoNotOptimize(chi(lambda, ConjugacyClass::k_cycle(n, 3)));
}
BENCHMARK(BM_Chi)->Arg(8)->Arg(10);

static void BM_LrCoefficient(benchmark::State& state) {
    Partition lambda({4, 3, 2, 1}), mu({3, 2}), nu({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lambda, mu, nu));
}
BENCHMARK(BM_LrCoefficient);

static void BM_BipartiteEnumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bipartite_max(n, n / 2, 4, BipartiteMode::enumerate));
}
BENCHMARK(BM_BipartiteEnumerate)->Arg(10)->Arg(12);

static void BM_Straighten(benchmark::State& state) {
    Permutation pi({4, 3, 2, 1, 0});  // fully decreasing on 5 letters
    AlgebraElement x = AlgebraElement::from(pi);
    for (auto _ : state) benchmark::DoNotOptimize(straighten(x, 3));
}
BENCHMARK(BM_Straighten);

static void BM_BuildRelaxation(benchmark::State& state) {
    GraphSpec g = GraphSpec::star(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_relaxation(g, 3, 2));
}
BENCHMARK(BM_BuildRelaxation)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SolveRelaxation(benchmark::State& state) {
    GraphSpec g = GraphSpec::star(static_cast<int>(state.range(0)));
    MomentSDP sdp = build_relaxation(g, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sdp));
}
BENCHMARK(BM_SolveRelaxation)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Lanczos(benchmark::State& state) {
    HamiltonianOperator h(GraphSpec::cycle(static_cast<int>(state.range(0))), 2);
    EigOptions opts;
    opts.method = EigMethod::iterative;
    for (auto _ : state) benchmark::DoNotOptimize(max_eigenvalue(h, opts));
}
BENCHMARK(BM_Lanczos)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
