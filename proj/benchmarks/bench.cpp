#include <benchmark/benchmark.h>

#include "fc/boundary.hpp"
#include "fc/chains.hpp"
#include "fc/diagram.hpp"
#include "fc/integrability.hpp"
#include "fc/noncrossing.hpp"

using namespace fc;

static void EnumerateNcp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ncp(static_cast<int>(st.range(0))));
}
BENCHMARK(EnumerateNcp)->DenseRange(6, 10, 2);

static void EnumerateChains(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_chains(static_cast<int>(st.range(0)), 2));
}
BENCHMARK(EnumerateChains)->DenseRange(3, 6);

static void KrewerasOrbit(benchmark::State& st) {
  const auto all = enumerate_ncp(static_cast<int>(st.range(0)));
  for (auto _ : st)
    for (const auto& p : all) benchmark::DoNotOptimize(kreweras(p));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(KrewerasOrbit)->Arg(6)->Arg(8);

static void PsiChains(benchmark::State& st) {
  const auto all = enumerate_chains(static_cast<int>(st.range(0)), 2);
  for (auto _ : st)
    for (const auto& c : all) benchmark::DoNotOptimize(psi_r(c));
}
BENCHMARK(PsiChains)->Arg(3)->Arg(4);

static void SymmetricPartitions(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_snc(static_cast<int>(st.range(0))));
}
BENCHMARK(SymmetricPartitions)->Arg(8)->Arg(10);

static void WordProduct(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(word_product("E1^1,E2^2,E1^2,E2^1,E3^1", 4, 2, Boundary::both));
}
BENCHMARK(WordProduct);

static void DiagramBasis(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_basis(static_cast<int>(st.range(0)), 2, Boundary::right));
}
BENCHMARK(DiagramBasis)->Arg(2)->Arg(3);

static void IsoOneBoundary(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_iso_1b(static_cast<int>(st.range(0))));
}
BENCHMARK(IsoOneBoundary)->Arg(3)->Arg(4);

static void YangBaxter(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_ybe(10, 20240607));
}
BENCHMARK(YangBaxter)->Unit(benchmark::kMillisecond);

static void Reflection(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_re(5, 20240607, KBranch::generic_plus));
}
BENCHMARK(Reflection)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
