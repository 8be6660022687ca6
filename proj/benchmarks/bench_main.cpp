#include <benchmark/benchmark.h>

#include "symdecomp/decompose.hpp"

using namespace symdecomp;

namespace {

void bm_ks_family(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(family_symmetric(n));
}
BENCHMARK(bm_ks_family)->DenseRange(3, 5);

void bm_ga_multiply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GroupAlgebraElement<Rational> avg(GroupSpec::symmetric(n));
    for (const auto& g : enumerate_group(GroupSpec::symmetric(n))) avg.add_term(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ga_multiply(avg, avg));
}
BENCHMARK(bm_ga_multiply)->DenseRange(4, 6);

void bm_verify_family(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto fam = family_symmetric(n);
    for (auto _ : state) benchmark::DoNotOptimize(verify_gys_family(fam, 2));
}
BENCHMARK(bm_verify_family)->DenseRange(3, 5);

void bm_image_basis(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto fam = family_symmetric(n);
    for (auto _ : state)
        for (const auto& rec : fam.records)
            benchmark::DoNotOptimize(projector_image_basis(rec.element, n, 2));
}
BENCHMARK(bm_image_basis)->DenseRange(3, 5);

void bm_pipeline_ring(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto model = hamiltonians_ring(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(subspace_controllability_report(model, false));
}
BENCHMARK(bm_pipeline_ring)->DenseRange(3, 5);

void bm_lie_closure_ring(benchmark::State& state) {
    auto model = hamiltonians_ring(static_cast<int>(state.range(0)));
    std::vector<Matrix> gens{model.drift};
    for (const auto& [label, op] : model.controls) gens.push_back(op);
    for (auto _ : state) benchmark::DoNotOptimize(lie_closure(gens));
}
BENCHMARK(bm_lie_closure_ring)->DenseRange(3, 4);

}  // namespace

BENCHMARK_MAIN();
