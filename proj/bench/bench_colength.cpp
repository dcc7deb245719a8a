#include <benchmark/benchmark.h>

#include "hkd/colength.hpp"
#include "hkd/semigroup.hpp"

namespace {

hkd::SemigroupSpec segre_planes() {
  hkd::SemigroupSpec s;
  s.rank = 4;
  s.generators = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
  s.weights = {1, 1, 1, 1};
  s.p = 2;
  return s;
}

template <auto Count>
void run(benchmark::State& state) {
  const auto spec = segre_planes();
  const long q = state.range(0);
  const long max_m = 6 * q;
  const hkd::Semigroup semigroup(spec, max_m);
  const hkd::MonomialIdealSpec ideal{spec.generators};
  for (auto _ : state) benchmark::DoNotOptimize(Count(semigroup, ideal, q, max_m));
  state.counters["points"] = static_cast<double>(semigroup.size());
}

void BM_ColengthsSerial(benchmark::State& state) { run<hkd::colengths_serial>(state); }
void BM_ColengthsParallel(benchmark::State& state) { run<hkd::colengths_parallel>(state); }

}  // namespace

BENCHMARK(BM_ColengthsSerial)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColengthsParallel)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
