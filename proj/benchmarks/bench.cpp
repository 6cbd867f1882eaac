#include <benchmark/benchmark.h>

#include "coesg/coe.hpp"
#include "coesg/oracle.hpp"
#include "coesg/semigroup.hpp"
#include "coesg/trees.hpp"

namespace {

using coesg::GeneratorSet;
using coesg::Int;
using coesg::NumericalSemigroup;

void BM_FromGenerators(benchmark::State& state) {
  GeneratorSet gens{31, 47, 52, 77};
  for (auto _ : state) {
    benchmark::DoNotOptimize(NumericalSemigroup::from_generators(gens));
  }
}
BENCHMARK(BM_FromGenerators);

void BM_DpInvariants(benchmark::State& state) {
  GeneratorSet gens{101, 103, 107};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coesg::oracle::dp_invariants(gens));
  }
}
BENCHMARK(BM_DpInvariants);

void BM_TreeEnumerate(benchmark::State& state) {
  coesg::trees::TreeSpec spec{coesg::trees::Family::all, 0,
                              coesg::trees::EnumerationBound{state.range(0), {}, {}}};
  for (auto _ : state) {
    auto vertices = coesg::trees::enumerate(spec);
    benchmark::DoNotOptimize(vertices);
    state.counters["vertices"] = static_cast<double>(vertices.size());
  }
}
BENCHMARK(BM_TreeEnumerate)->Arg(10)->Arg(15)->Arg(20);

void BM_TreeEnumerateThreaded(benchmark::State& state) {
  coesg::trees::TreeSpec spec{coesg::trees::Family::all, 0,
                              coesg::trees::EnumerationBound{20, {}, {}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coesg::trees::enumerate(spec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TreeEnumerateThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_OracleEnumerate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(coesg::oracle::all_semigroups_up_to_genus(state.range(0)));
  }
}
BENCHMARK(BM_OracleEnumerate)->Arg(8)->Arg(12)->Arg(15);

void BM_ChainToFull(benchmark::State& state) {
  NumericalSemigroup deep = NumericalSemigroup::from_generators(GeneratorSet{2, 2001});
  for (auto _ : state) {
    benchmark::DoNotOptimize(coesg::chain_to_full(deep));
  }
}
BENCHMARK(BM_ChainToFull);

}  // namespace

BENCHMARK_MAIN();
