#include <benchmark/benchmark.h>

#include "nradius/bounds.hpp"
#include "nradius/ensembles.hpp"
#include "nradius/numerical_range.hpp"
#include "nradius/spectral.hpp"

using namespace nradius;

namespace {

CMatrix sample(std::size_t dim) {
    return sample_matrix_at({EnsembleKind::ginibre, dim, 1, 7}, 0);
}

void bm_numerical_radius(benchmark::State& state) {
    const CMatrix a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(a, 1e-8));
}

void bm_herm_eig(benchmark::State& state) {
    const CMatrix a = sample(static_cast<std::size_t>(state.range(0)));
    const CMatrix h = real_part(a);
    for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}

void bm_herm_eigenvalues(benchmark::State& state) {
    const CMatrix a = sample(static_cast<std::size_t>(state.range(0)));
    const CMatrix h = real_part(a);
    for (auto _ : state) benchmark::DoNotOptimize(herm_eigenvalues(h));
}

void bm_classical_bounds(benchmark::State& state) {
    const CMatrix a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SingleBoundEvaluator ev(a);
        benchmark::DoNotOptimize(ev.classical());
    }
}

// Full parameter sweep against one cached evaluator, the hot path of the
// verification harness.
void bm_interpolated_sweep(benchmark::State& state) {
    const CMatrix a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SingleBoundEvaluator ev(a);
        for (double r : {1.0, 1.5, 2.0, 3.0})
            for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
                benchmark::DoNotOptimize(ev.interpolated_upper(r, alpha));
    }
}

void bm_offdiag_block_radius(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const auto [a, b] = sample_pair_at({EnsembleKind::offdiag_pair, dim, 1, 7}, 0);
    for (auto _ : state) {
        PairBoundEvaluator ev(a, b);
        benchmark::DoNotOptimize(ev.block_radius());
    }
}

void bm_sample_ginibre(benchmark::State& state) {
    const EnsembleSpec spec{EnsembleKind::ginibre, static_cast<std::size_t>(state.range(0)),
                            1, 7};
    std::size_t index = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_matrix_at(spec, index++));
}

void bm_sample_unitary(benchmark::State& state) {
    const EnsembleSpec spec{EnsembleKind::unitary, static_cast<std::size_t>(state.range(0)),
                            1, 7};
    std::size_t index = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_matrix_at(spec, index++));
}

}  // namespace

BENCHMARK(bm_numerical_radius)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_herm_eig)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_herm_eigenvalues)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_classical_bounds)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_interpolated_sweep)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_offdiag_block_radius)->Arg(2)->Arg(4);
BENCHMARK(bm_sample_ginibre)->Arg(4)->Arg(16);
BENCHMARK(bm_sample_unitary)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
