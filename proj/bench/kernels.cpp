#include <benchmark/benchmark.h>

#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"

#include <vector>

namespace {

const ualg::FiniteAlgebra& subject(std::int64_t which) {
  static const ualg::FiniteAlgebra d4 = ualg::find_builtin("d4")->algebra;
  static const ualg::FiniteAlgebra z2xz2xz2 = ualg::find_builtin("z2xz2xz2")->algebra;
  static const ualg::FiniteAlgebra m3 = ualg::find_builtin("m3")->algebra;
  static const ualg::FiniteAlgebra chain2 = ualg::find_builtin("chain2")->algebra;
  static const ualg::FiniteAlgebra z2xz4 = ualg::find_builtin("z2xz4")->algebra;
  static const ualg::FiniteAlgebra m3x2 = ualg::make_product({m3, chain2}).algebra;
  static const ualg::FiniteAlgebra z4x4 =
      ualg::make_product({z2xz4, ualg::find_builtin("z2")->algebra, ualg::find_builtin("z2")->algebra}).algebra;
  switch (which) {
    case 0: return d4;
    case 1: return z2xz2xz2;
    case 2: return m3x2;
    default: return z4x4;
  }
}

ualg::Execution mode(std::int64_t v) { return v == 0 ? ualg::Execution::serial : ualg::Execution::parallel; }

void BM_PrincipalCongruences(benchmark::State& state) {
  const auto& a = subject(state.range(0));
  const auto ex = mode(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ualg::principal_congruences(a, ex));
  state.SetLabel(a.name());
}

void BM_CongruenceLattice(benchmark::State& state) {
  const auto& a = subject(state.range(0));
  const auto ex = mode(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ualg::congruence_lattice(a, ex));
  state.SetLabel(a.name());
}

void BM_CollisionFreePair(benchmark::State& state) {
  const auto& a = subject(state.range(0));
  const auto ex = mode(state.range(1));
  // Labels that every nonzero congruence collides with, so the sweep is exhaustive.
  std::vector<long> labels(a.size(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(ualg::collision_free_pairs(a, labels, ex));
  state.SetLabel(a.name());
}

}  // namespace

BENCHMARK(BM_PrincipalCongruences)->ArgsProduct({{0, 1, 2, 3}, {0, 1}});
BENCHMARK(BM_CongruenceLattice)->ArgsProduct({{0, 1, 2, 3}, {0, 1}});
BENCHMARK(BM_CollisionFreePair)->ArgsProduct({{0, 1, 2, 3}, {0, 1}});

BENCHMARK_MAIN();
