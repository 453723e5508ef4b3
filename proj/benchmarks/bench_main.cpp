#include <benchmark/benchmark.h>

#include "superschur/alternant.hpp"
#include "superschur/dets.hpp"
#include "superschur/rings.hpp"

using namespace superschur;

static void BM_BigH(benchmark::State& state) {
  const RingContext ctx(3, 2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(big_H(k, ctx));
}
BENCHMARK(BM_BigH)->Arg(-6)->Arg(0)->Arg(6);

static void BM_Alternate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const RingContext ctx(m, 0);
  IntSeq lambda(static_cast<std::size_t>(m), 0);
  lambda[0] = 3;
  for (auto _ : state) benchmark::DoNotOptimize(euler_E(lambda, ctx));
}
BENCHMARK(BM_Alternate)->DenseRange(2, 5);

static void BM_KacK(benchmark::State& state) {
  const RingContext ctx(2, 2);
  const GeneratorTable table(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(kac_K({2, -1}, {1, -2}, table));
}
BENCHMARK(BM_KacK);

static void BM_JacobiTrudi(benchmark::State& state) {
  const RingContext ctx(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_trudi_E({3, 1, -2}, 3, ctx));
}
BENCHMARK(BM_JacobiTrudi);

static void BM_Expand(benchmark::State& state) {
  const RingContext ctx(2, 1);
  const BasisCatalog catalog(BasisKind::x_pm, ctx, Window{3, 5});
  const LaurentPoly f = big_H(2, ctx) * big_H(-1, ctx) * big_H(1, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_basis(f, catalog));
}
BENCHMARK(BM_Expand);

BENCHMARK_MAIN();
