#include <benchmark/benchmark.h>

#include "mh/catalog.hpp"
#include "mh/group_structure.hpp"
#include "mh/set_actions.hpp"

using namespace mh;

namespace {

// Fresh generator lists so the stabilizer chain is rebuilt every iteration.
void BM_SchreierSims(benchmark::State &state, PermGroup (*make)())
{
  auto const G = make();
  for (auto _ : state) {
    PermGroup H(G.degree(), G.generators());
    benchmark::DoNotOptimize(H.order());
  }
}

PermGroup m11() { return groups::mathieu11(); }
PermGroup s8() { return groups::sym(8); }
PermGroup agl32() { return groups::agl(3, 2); }
PermGroup s4wr() { return groups::wreath(groups::sym(4), groups::cyclic(2)); }

BENCHMARK_CAPTURE(BM_SchreierSims, mathieu11, m11);
BENCHMARK_CAPTURE(BM_SchreierSims, sym8, s8);
BENCHMARK_CAPTURE(BM_SchreierSims, agl3_2, agl32);
BENCHMARK_CAPTURE(BM_SchreierSims, s4_wr_c2, s4wr);

void BM_ConjugacyClasses(benchmark::State &state)
{
  auto const G = groups::psl2(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ConjugacyClasses(G).size());
}
BENCHMARK(BM_ConjugacyClasses)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Sylow(benchmark::State &state)
{
  auto const G = groups::sym(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sylow(G, 2).order());
}
BENCHMARK(BM_Sylow)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PowerSetOrbits(benchmark::State &state)
{
  auto const H = state.range(0) == 0 ? groups::agl(3, 2) : groups::psl2(11);
  for (auto _ : state)
    benchmark::DoNotOptimize(power_set_orbit_sizes(H).size());
  state.SetLabel("degree " + std::to_string(H.degree()));
}
BENCHMARK(BM_PowerSetOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace
