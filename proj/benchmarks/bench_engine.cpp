#include <benchmark/benchmark.h>

#include <random>

#include "logicsys/constructions.hpp"
#include "logicsys/engine.hpp"
#include "logicsys/table.hpp"

#include "../tests/support/random_systems.hpp"

using namespace logicsys;

static void BM_BlockFamilyClosure(benchmark::State& state) {
  RuleSystem family = block_family(0);
  // First k-1 symbols of block k, driving one firing per block boundary.
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  auto block = block_tuple(0, k);
  SymbolSet x(block.begin(), block.end() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(close(family, x).closure);
  }
}
BENCHMARK(BM_BlockFamilyClosure)->Arg(4)->Arg(16)->Arg(40);

static void BM_RandomSystemClosure(benchmark::State& state) {
  std::mt19937 rng(71);
  RuleSystem system = testing::random_system(rng, 8);
  SymbolSet x = testing::random_subset(rng, system.language);
  for (auto _ : state) {
    benchmark::DoNotOptimize(close(system, x).closure);
  }
}
BENCHMARK(BM_RandomSystemClosure);

static void BM_Tabulation(benchmark::State& state) {
  std::mt19937 rng(73);
  RuleSystem system =
      testing::random_system(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(table_from_system(system, system.language));
  }
}
BENCHMARK(BM_Tabulation)->Arg(6)->Arg(10);

static void BM_Roundtrip(benchmark::State& state) {
  std::mt19937 rng(79);
  RuleSystem system = testing::random_system(rng, 6);
  OperatorTable t = table_from_system(system, system.language);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roundtrip_check(t));
  }
}
BENCHMARK(BM_Roundtrip);

BENCHMARK_MAIN();
