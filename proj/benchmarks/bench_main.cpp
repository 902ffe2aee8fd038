#include <benchmark/benchmark.h>

#include "cobweb/chain_interpretation.hpp"
#include "cobweb/fibonacci.hpp"
#include "cobweb/incidence_algebra.hpp"
#include "cobweb/konvalina.hpp"
#include "cobweb/paths_and_fences.hpp"

namespace {

using namespace cobweb;

void BM_FibonomialDef(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fibonomial_def(n, n / 2));
}
BENCHMARK(BM_FibonomialDef)->Arg(12)->Arg(60)->Arg(240);

void BM_FibonomialTable(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const FibonomialTable t(n, RecurrenceForm::B);
    benchmark::DoNotOptimize(t(n, n / 2));
  }
}
BENCHMARK(BM_FibonomialTable)->Arg(12)->Arg(60)->Arg(240);

void BM_FibonomialChains(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fibonomial_via_chains(n, n / 2));
}
BENCHMARK(BM_FibonomialChains)->Arg(12)->Arg(60);

void BM_FibonomialGv(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fibonomial_via_gv(n, n / 2));
}
BENCHMARK(BM_FibonomialGv)->DenseRange(6, 14, 4);

void BM_Mobius(benchmark::State& state) {
  const auto z = zeta_from_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius(z));
  state.counters["size"] = static_cast<double>(z.size());
}
BENCHMARK(BM_Mobius)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ZetaExplicit(benchmark::State& state) {
  const auto size = vertex_count(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_explicit(size));
}
BENCHMARK(BM_ZetaExplicit)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ChainDfsFromRoot(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_chains(0, n, kRoot));
  state.counters["chains"] = static_cast<double>(max_chains_from_root(n).get_ui());
}
BENCHMARK(BM_ChainDfsFromRoot)->DenseRange(4, 8, 2);

void BM_KonvalinaSecondKind(benchmark::State& state) {
  const auto w = specialize(WeightFamily::Arithmetic, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_second_kind(w, w.size()));
}
BENCHMARK(BM_KonvalinaSecondKind)->Arg(8)->Arg(64);

void BM_FenceTransfer(benchmark::State& state) {
  const FencePoset f(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fence_ideals_transfer(f));
}
BENCHMARK(BM_FenceTransfer)->Arg(20)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
