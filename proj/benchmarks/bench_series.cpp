#include "bohr/catalog.hpp"
#include "bohr/problems.hpp"
#include "bohr/verify.hpp"

#include <benchmark/benchmark.h>

static void BM_ExpSeries(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const bohr::CoeffSeries c = bohr::exponent_series(bohr::MapKind::H0Factor, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bohr::exp_series(c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpSeries)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_ComposeSeries(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const bohr::CoeffSeries koebe = bohr::koebe_coeffs(order);
    const bohr::SchwarzSample sample{bohr::Complex(0.4, 0.3), false, "bench"};
    const bohr::CoeffSeries phi = bohr::schwarz_series(sample, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bohr::compose_series(koebe, phi));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComposeSeries)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_SolveRadius(benchmark::State& state) {
    const bohr::ProblemParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bohr::solve_radius("thm2_7", params));
    }
}
BENCHMARK(BM_SolveRadius);

static void BM_SweepInequality(benchmark::State& state) {
    const bohr::ProblemParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bohr::sweep_inequality("thm2_11", params, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_SweepInequality)->Arg(256)->Arg(1024);

static void BM_SubordinationFuzz(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bohr::subordination_fuzz(1, static_cast<int>(state.range(0)), 0.125, 64));
    }
}
BENCHMARK(BM_SubordinationFuzz)->Arg(20)->Arg(100);

BENCHMARK_MAIN();
