#include <benchmark/benchmark.h>

#include "coldeph/analysis.hpp"
#include "coldeph/channel.hpp"
#include "coldeph/measures.hpp"

using namespace coldeph;

namespace {

BathParams low_t() {
    BathParams p;
    p.beta = BathParams::beta_from_temperature_ratio(1.0 / 60.0, p.omega_c);
    return p;
}

void BM_ConcurrenceFermion(benchmark::State& state) {
    const DensityMatrix rho = evolve(pure_density(named_state("f1234")), low_t(), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_ConcurrenceFermion);

void BM_ConcurrenceQubit(benchmark::State& state) {
    const DensityMatrix rho = evolve(pure_density(named_state("q1234")), low_t(), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_ConcurrenceQubit);

void BM_BathFunctions(benchmark::State& state) {
    BathParams p = low_t();
    switch (state.range(0)) {
    case 0: p.beta = kInfiniteBeta; p.mode = ClosedFormZeroT{}; break;
    case 1: p.mode = ClosedFormLowT{}; break;
    case 2: p.mode = Quadrature{}; break;
    default: p.mode = DiscreteModes{}; break;
    }
    state.SetLabel(mode_name(p.mode));
    double t = 0.0;
    for (auto _ : state) {
        t = t < 10.0 ? t + 0.01 : 0.01;
        benchmark::DoNotOptimize(bath_functions(p, t));
    }
}
BENCHMARK(BM_BathFunctions)->DenseRange(0, 3);

void BM_DetectEvents(benchmark::State& state) {
    const StateVector psi = named_state("q123_4");
    const BathParams p = low_t();
    for (auto _ : state) benchmark::DoNotOptimize(detect_events(psi, p, 10.0));
}
BENCHMARK(BM_DetectEvents)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
