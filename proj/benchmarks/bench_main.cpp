#include <benchmark/benchmark.h>

#include "lapspec/graph.hpp"
#include "lapspec/random.hpp"
#include "lapspec/spectra.hpp"
#include "lapspec/treecount.hpp"

namespace {

using namespace lapspec;

void BM_DetCompletePlusOnes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = laplacian(complete_graph(n)) + IntMatrix::all_ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetCompletePlusOnes)->RangeMultiplier(2)->Range(4, 64);

void BM_CharPolyRandomGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const IntMatrix l = laplacian(random_graph(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(l));
}
BENCHMARK(BM_CharPolyRandomGraph)->RangeMultiplier(2)->Range(4, 32);

void BM_PerturbedCharPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const IntMatrix l = laplacian(random_graph(rng, n));
  const IntVector u = random_vector(rng, n, -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(perturbed_charpoly(l, u));
}
BENCHMARK(BM_PerturbedCharPoly)->Arg(10)->Arg(20);

void BM_TreeCounters(benchmark::State& state) {
  const Graph g = bipartite_minus_matching(5);
  const IntVector ones = IntVector::ones(g.order());
  switch (state.range(0)) {
    case 0:
      for (auto _ : state) benchmark::DoNotOptimize(tau_cofactor(g, 1, 1));
      state.SetLabel("cofactor");
      break;
    case 1:
      for (auto _ : state) benchmark::DoNotOptimize(tau_rank_one(g, ones, ones));
      state.SetLabel("rankone");
      break;
    case 2:
      for (auto _ : state) benchmark::DoNotOptimize(tau_charpoly(g));
      state.SetLabel("charpoly");
      break;
    default:
      for (auto _ : state) benchmark::DoNotOptimize(tau_bruteforce(g));
      state.SetLabel("bruteforce");
  }
}
BENCHMARK(BM_TreeCounters)->DenseRange(0, 3);

void BM_ThresholdDiagonal(benchmark::State& state) {
  Rng rng(3);
  std::vector<ThresholdStep> steps(static_cast<std::size_t>(state.range(0)));
  for (auto& s : steps) s = rng.below(2) == 1 ? ThresholdStep::Dominating : ThresholdStep::Isolated;
  const ThresholdSequence seq(std::move(steps));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_perturbed_diagonal(seq));
}
BENCHMARK(BM_ThresholdDiagonal)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
