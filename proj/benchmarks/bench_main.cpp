// bench_main.cpp — Timings for kernels, self-energy assembly, master-equation steps, concurrence and the lattice oracle

#include <benchmark/benchmark.h>

#include "giantwg/coupling.hpp"
#include "giantwg/dynamics.hpp"
#include "giantwg/entanglement.hpp"
#include "giantwg/oracle.hpp"
#include "giantwg/self_energy.hpp"

using namespace giantwg;

namespace {

const SshParams kP(1.0, 0.3);

void BM_KernelClosed(benchmark::State& state) {
    const std::complex<double> z(1.0, 1e-8);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_closed(KernelKind::B, 3, z, kP, 1.0));
}
BENCHMARK(BM_KernelClosed);

void BM_KernelFinite(benchmark::State& state) {
    const std::complex<double> z(1.0, 2e-3);
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_finite(KernelKind::B, 3, z, kP, L, 1.0));
    state.SetComplexityN(L);
}
BENCHMARK(BM_KernelFinite)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_RatesAndShifts(benchmark::State& state) {
    const auto c = parse_config("ABBA", Geometry{2, 0}, 0.05);
    for (auto _ : state) benchmark::DoNotOptimize(rates_and_shifts(c, 1.0, kP));
}
BENCHMARK(BM_RatesAndShifts);

void BM_Evolve(benchmark::State& state) {
    const auto se = rates_and_shifts(parse_config("ABBA", Geometry{2, 0}, 0.05), 1.0, kP);
    const double tmax = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve(basis_projector(InitialState::EE), se, 1.0, {tmax, 1e-2, 100, 1.0}));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(tmax / 1e-2));
}
BENCHMARK(BM_Evolve)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Concurrence(benchmark::State& state) {
    DensityMatrix rho = DensityMatrix::Zero();
    rho(kEE, kEE) = 0.2;
    rho(kEG, kEG) = rho(kGE, kGE) = 0.3;
    rho(kEG, kGE) = rho(kGE, kEG) = 0.25;
    rho(kGG, kGG) = 0.2;
    for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_ExactLattice(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const auto c = centered(parse_config("AABB", Geometry{1, 0}, 0.05), L);
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve_exact(c, 1.0, kP, L, atomic_state(InitialState::EG, L), {5.0, 5e-4, 1000}));
    state.SetComplexityN(L);
}
BENCHMARK(BM_ExactLattice)->Arg(200)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

} // namespace

BENCHMARK_MAIN();
