// Microbenchmarks for the exact kernels: catalecticant ranks, kernel-based
// harmonic bases, the colon-criterion check, Hilbert values and the whole
// certification pipeline.

#include <benchmark/benchmark.h>

#include "apolab/apolarity.hpp"
#include "apolab/certify.hpp"
#include "apolab/groebner.hpp"
#include "apolab/harmonic.hpp"

using namespace apolab;

namespace {

std::vector<Poly> ladder_check_order(unsigned d) {
    std::vector<Poly> out;
    for (unsigned k = 0; k <= d; ++k)
        out.push_back(harmonic_basis_3(d).element(static_cast<int>(k)));
    return out;
}

void BM_catalecticant_rank(benchmark::State& state) {
    const unsigned s = static_cast<unsigned>(state.range(0));
    const Poly f = quadric_power(VariableFrame::x(3), s);
    for (auto _ : state) benchmark::DoNotOptimize(catalecticant(f, s).rank);
}

void BM_harmonic_kernel_basis(benchmark::State& state) {
    const unsigned d = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_space_basis(3, d).size());
}

void BM_buchberger_check(benchmark::State& state) {
    const unsigned d = static_cast<unsigned>(state.range(0));
    const auto ordered = ladder_check_order(d);
    for (auto _ : state) benchmark::DoNotOptimize(buchberger_colon_check(ordered).ok);
}

void BM_hilbert_window(benchmark::State& state) {
    const unsigned s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        GradedIdealPresentation ideal = ladder_ideal(s + 1);
        long long acc = 0;
        for (unsigned a = 0; a <= 2 * s + 4; ++a) acc += ideal.hilbert_function(a);
        benchmark::DoNotOptimize(acc);
    }
}

void BM_certify(benchmark::State& state) {
    const unsigned s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(certify_border_rank_q3(s).conclusion);
}

}  // namespace

BENCHMARK(BM_catalecticant_rank)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_harmonic_kernel_basis)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_buchberger_check)->Arg(4)->Arg(8);
BENCHMARK(BM_hilbert_window)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_certify)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
