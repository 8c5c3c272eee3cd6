#include <benchmark/benchmark.h>

#include "shiftedkeys/expand.hpp"
#include "shiftedkeys/symfunc.hpp"

using namespace shiftedkeys;

namespace {

void BM_KeyPolynomial(benchmark::State& state) {
    WeakComposition alpha{3, 0, 1, 4, 0, 0, 3};
    for (auto _ : state) {
        clear_basis_caches();
        benchmark::DoNotOptimize(key(alpha));
    }
}
BENCHMARK(BM_KeyPolynomial);

void BM_QKey(benchmark::State& state) {
    WeakComposition alpha{3, 0, 1, 4, 0, 0, 3};
    for (auto _ : state) {
        clear_basis_caches();
        benchmark::DoNotOptimize(qkey(alpha));
    }
}
BENCHMARK(BM_QKey);

void BM_KeyExpandSchubert(benchmark::State& state) {
    Permutation w = Permutation::parse("3517246");
    Poly s = schubert(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(key_expand(s));
    }
}
BENCHMARK(BM_KeyExpandSchubert);

void BM_SymmetrizeBeta(benchmark::State& state) {
    Poly g = grothendieck(Permutation::parse("35142"));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetrize(OperatorKind::ISO_B, n, g));
    }
}
BENCHMARK(BM_SymmetrizeBeta)->Arg(5)->Arg(7);

void BM_GrothSp(benchmark::State& state) {
    FpfInvolution z = FpfInvolution::parse("(1,4)(2,3)(5,8)(6,7)");
    for (auto _ : state) {
        clear_basis_caches();
        benchmark::DoNotOptimize(groth_sp(z));
    }
}
BENCHMARK(BM_GrothSp);

void BM_PositiveSearch(benchmark::State& state) {
    FpfInvolution z = FpfInvolution::parse("(1,5)(2,3)(4,8)(6,7)");
    Poly f = inv_schubert_sp(z);
    for (auto _ : state) {
        benchmark::DoNotOptimize(positive_search(f, SearchFamily::PKEY));
    }
}
BENCHMARK(BM_PositiveSearch);

void BM_GPTruncation(benchmark::State& state) {
    Partition mu{4, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gp(mu, 5).value.term_count());
    }
}
BENCHMARK(BM_GPTruncation);

} // namespace

BENCHMARK_MAIN();
