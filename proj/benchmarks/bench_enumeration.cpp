#include <benchmark/benchmark.h>

#include "locale_lab/lattice.hpp"
#include "locale_lab/space.hpp"
#include "locale_lab/sublocale.hpp"

namespace {

void BM_SubsetFilterChain(benchmark::State& state) {
  lab::FiniteLattice L = lab::chain_lattice(static_cast<int>(state.range(0)));
  lab::Caps caps;
  caps.max_enumeration = 18;
  for (auto _ : state) {
    auto subs = lab::enumerate_sublocales(
        L, caps, lab::EnumerationBackend::kSubsetFilter);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_SubsetFilterChain)->DenseRange(8, 16, 2);

void BM_JoinClosureChain(benchmark::State& state) {
  lab::FiniteLattice L = lab::chain_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto subs = lab::enumerate_sublocales(
        L, {}, lab::EnumerationBackend::kJoinClosure);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_JoinClosureChain)->DenseRange(8, 14, 2);

void BM_SubsetFilterBoolean(benchmark::State& state) {
  lab::FiniteLattice L =
      lab::boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto subs = lab::enumerate_sublocales(
        L, {}, lab::EnumerationBackend::kSubsetFilter);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_SubsetFilterBoolean)->DenseRange(2, 4, 1);

void BM_FrameBuildFromSpace(benchmark::State& state) {
  lab::FiniteSpace X = lab::random_space(static_cast<int>(state.range(0)),
                                         42, 0.5);
  for (auto _ : state) {
    auto F = lab::frame_from_space(X);
    benchmark::DoNotOptimize(F.lattice.size());
  }
}
BENCHMARK(BM_FrameBuildFromSpace)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
