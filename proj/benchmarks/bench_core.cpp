#include <benchmark/benchmark.h>

#include "mperron/classification.hpp"
#include "mperron/family.hpp"
#include "mperron/integer.hpp"
#include "mperron/irreducibility.hpp"
#include "mperron/matrix.hpp"
#include "mperron/monogenicity.hpp"
#include "mperron/poly.hpp"
#include "mperron/roots.hpp"

using namespace mperron;

static void BM_Discriminant(benchmark::State& state) {
  const IntPoly f = build(FamilyParams::make(static_cast<unsigned>(state.range(0)), 5, 293));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_resultant(f));
}
BENCHMARK(BM_Discriminant)->DenseRange(3, 9, 3);

static void BM_Factorize(benchmark::State& state) {
  // Product of two primes near 10^9.
  const Integer n = Integer("1000000007") * Integer("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_SquarefreeG(benchmark::State& state) {
  const FamilyParams fp = FamilyParams::make(9, 4, 1999);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_status(G_value(fp)));
}
BENCHMARK(BM_SquarefreeG);

static void BM_CertifiedRoots(benchmark::State& state) {
  const IntPoly f = build(FamilyParams::make(static_cast<unsigned>(state.range(0)), 3, 101));
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(f));
}
BENCHMARK(BM_CertifiedRoots)->DenseRange(2, 14, 4);

static void BM_FactorOracle(benchmark::State& state) {
  const IntPoly f = build(FamilyParams::make(8, 3, 101));
  for (auto _ : state) benchmark::DoNotOptimize(factor_oracle(f));
}
BENCHMARK(BM_FactorOracle);

static void BM_Monogenic(benchmark::State& state) {
  const IntPoly f = build(FamilyParams::make(6, 5, 211));
  for (auto _ : state) benchmark::DoNotOptimize(monogenic(f, IndexMethod::Both));
}
BENCHMARK(BM_Monogenic);

static void BM_Classify(benchmark::State& state) {
  const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(classify(lehmer));
}
BENCHMARK(BM_Classify);

static void BM_PowerIteration(benchmark::State& state) {
  const IntMatrix m = companion_matrix(9, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(dominant_eigenvalue(m));
}
BENCHMARK(BM_PowerIteration);

static void BM_Certificate(benchmark::State& state) {
  const FamilyParams fp = FamilyParams::make(static_cast<unsigned>(state.range(0)), 1, 199);
  for (auto _ : state) benchmark::DoNotOptimize(strictly_perron_certificate(fp));
}
BENCHMARK(BM_Certificate)->DenseRange(2, 8, 3);

BENCHMARK_MAIN();
