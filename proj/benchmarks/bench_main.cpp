#include <benchmark/benchmark.h>

#include "qca/cartan.hpp"
#include "qca/seeds.hpp"

using namespace qca;

namespace {

QuantumSeed g2_seed() {
  return seed_from_cartan(validate_cartan(IntMatrix{{2, -1}, {-3, 2}}),
                          DoubleWord({1, 2, 1, 2, 1, 2, -1, -2, -1, -2}, 2));
}

// A few mutations deep, so frame entries have many terms.
QuantumSeed deep_seed() {
  QuantumSeed s = g2_seed();
  for (std::size_t i = 0; i < 4; ++i)
    s = mutate(s, s.ex()[i % s.ex().size()]);
  return s;
}

void BM_TorusMultiply(benchmark::State& state) {
  const QuantumSeed s = deep_seed();
  const TorusElement& a = s.x(s.ex()[0]);
  const TorusElement& b = s.x(s.ex()[1]);
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
  state.SetLabel(std::to_string(a.size()) + "x" + std::to_string(b.size()) + " terms");
}
BENCHMARK(BM_TorusMultiply);

void BM_SolveLeft(benchmark::State& state) {
  const QuantumSeed s = deep_seed();
  const TorusElement& a = s.x(s.ex()[0]);
  const TorusElement n = a * s.x(s.ex()[1]);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_left(a, n));
}
BENCHMARK(BM_SolveLeft);

void BM_Mutate(benchmark::State& state) {
  const QuantumSeed s = deep_seed();
  const std::size_t k = s.ex()[1];
  MutationOptions opt;
  opt.verify = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(mutate(s, k, opt));
}
BENCHMARK(BM_Mutate)->Arg(0)->Arg(1);

void BM_ExploreRank2(benchmark::State& state) {
  const QuantumSeed s = initial_seed(rank2_pair(1, state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(explore(s));
}
BENCHMARK(BM_ExploreRank2)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
