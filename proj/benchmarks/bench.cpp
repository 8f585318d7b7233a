#include <benchmark/benchmark.h>

#include "support.hpp"

namespace evoalg {
namespace {

// Relation matrix of a directed cycle with a chord, n vertices.
void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  edges.push_back({0, n / 2});
  const IntMatrix m = relation_matrix(Digraph(n, std::move(edges)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GraphAutomorphisms(benchmark::State& state) {
  testing::Rng rng(1);
  const Digraph g = testing::random_digraph(rng, static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(graph_automorphisms(g));
}
BENCHMARK(BM_GraphAutomorphisms)->Arg(4)->Arg(6)->Arg(8);

void BM_AlgebraAutomorphisms(benchmark::State& state) {
  testing::Rng rng(2);
  const EvolutionAlgebra a =
      testing::random_full_algebra(rng, FieldSpec::prime(static_cast<std::uint64_t>(state.range(1))),
                                   static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(algebra_automorphisms(a));
}
BENCHMARK(BM_AlgebraAutomorphisms)->Args({3, 7})->Args({5, 7})->Args({5, 101});

void BM_DerivationsNullspace(benchmark::State& state) {
  testing::Rng rng(3);
  const EvolutionAlgebra a =
      testing::random_full_algebra(rng, FieldSpec::prime(7), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivations_nullspace(a));
}
BENCHMARK(BM_DerivationsNullspace)->Arg(3)->Arg(5)->Arg(8);

}  // namespace
}  // namespace evoalg

BENCHMARK_MAIN();
