#include <benchmark/benchmark.h>

#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/harness.hpp"

using namespace mh;

namespace {

PermGroup pick(int which)
{
  switch (which) {
  case 0: return groups::sym(5);
  case 1: return groups::psl2(11);
  case 2: return groups::agl(3, 2);
  default: return groups::mathieu11();
  }
}

void BM_CharacterTable(benchmark::State &state)
{
  auto const G = pick(static_cast<int>(state.range(0)));
  ConjugacyClasses const classes(G);
  for (auto _ : state)
    benchmark::DoNotOptimize(character_table(classes).size());
  state.SetLabel("order " + G.order().get_str());
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BlockDistribution(benchmark::State &state)
{
  auto const t = character_table(pick(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (std::uint64_t p : {2, 3, 5})
      benchmark::DoNotOptimize(block_distribution(t, p).count());
}
BENCHMARK(BM_BlockDistribution)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyEm(benchmark::State &state)
{
  auto const catalog = builtin_catalog();
  EmOptions o;
  o.max_order = 2000;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_em(catalog, o).reports.size());
}
BENCHMARK(BM_VerifyEm)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace
