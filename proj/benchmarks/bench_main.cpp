#include "howe/oracle.hpp"
#include "howe/orbits.hpp"
#include "howe/theta.hpp"

#include <benchmark/benchmark.h>

using namespace howe;

namespace {

const SpaceType calt{Field::C, Division::C, -1};
const SpaceType csym{Field::C, Division::C, 1};

void BM_EnumerateSymplectic(benchmark::State& state) {
    const auto v = FormedSpace::with_dim(calt, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_orbits(v));
}
BENCHMARK(BM_EnumerateSymplectic)->DenseRange(2, 12, 2);

void BM_EnumerateRealOrthogonal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto v = FormedSpace::with_signature({Field::R, Division::R, 1}, n / 2, n - n / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_orbits(v));
}
BENCHMARK(BM_EnumerateRealOrthogonal)->DenseRange(2, 10, 2);

void BM_GeneralizedDescent(benchmark::State& state) {
    const auto vp = FormedSpace::with_dim(calt, 8);
    const auto v = FormedSpace::with_dim(csym, 6);
    std::vector<Tableau> image;
    for (const auto& op : enumerate_orbits(vp))
        if (in_moment_image(op, v))
            image.push_back(op);
    for (auto _ : state)
        for (const auto& op : image)
            benchmark::DoNotOptimize(generalized_descent(op, v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(image.size()));
}
BENCHMARK(BM_GeneralizedDescent);

void BM_Identify(benchmark::State& state) {
    const auto v = FormedSpace::with_dim(calt, static_cast<int>(state.range(0)));
    const auto orbits = enumerate_orbits(v);
    const auto r = realize_triple(orbits.front());
    const LieAlgebra g(r.model);
    for (auto _ : state)
        benchmark::DoNotOptimize(identify(r.X, g));
}
BENCHMARK(BM_Identify)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_CheckDescent(benchmark::State& state) {
    const auto op = enumerate_orbits(FormedSpace::with_dim(csym, 6)).front();
    const auto v = FormedSpace::with_dim(calt, 4);
    const auto dr = generalized_descent(op, v);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_descent(dr));
}
BENCHMARK(BM_CheckDescent)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
