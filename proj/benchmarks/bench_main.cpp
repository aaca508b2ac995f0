#include <benchmark/benchmark.h>

#include <random>

#include "pratio/bounds.hpp"
#include "pratio/extremal.hpp"
#include "pratio/oracle.hpp"
#include "pratio/perron.hpp"

namespace {

using namespace pratio;

Digraph dense_random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.3);
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && coin(rng)) edges.emplace_back(u, v);
      }
    }
    Digraph g(n, edges);
    if (is_strongly_connected(g)) return g;
  }
}

void BM_SolveExactExtremal(benchmark::State& state) {
  auto g = construct_extremal(static_cast<std::size_t>(state.range(0)), ExtremalVariant::d1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g));
}
BENCHMARK(BM_SolveExactExtremal)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SolveExactRandom(benchmark::State& state) {
  auto g = dense_random(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g));
}
BENCHMARK(BM_SolveExactRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_SolvePower(benchmark::State& state) {
  auto g = dense_random(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_power(g));
}
BENCHMARK(BM_SolvePower)->Arg(16)->Arg(64)->Arg(256);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_principal_ratio_brute(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DiscrepancyExhaustive(benchmark::State& state) {
  auto g = complete_digraph(static_cast<std::size_t>(state.range(0)));
  Rational b(1, 2), c(1, 4), d(1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_discrepancy(g, b, c, d));
}
BENCHMARK(BM_DiscrepancyExhaustive)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
