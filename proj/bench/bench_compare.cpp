// Serial reference vs OpenMP kernels: the bracket state sum over 2^n
// smoothings and the coloration sweep over set partitions.

#include <benchmark/benchmark.h>

#include "chroma/braid.hpp"
#include "chroma/oracle.hpp"
#include "chroma/skein.hpp"

namespace {

using namespace chroma;

ColoredDiagram torus_closure(int crossings) {
  BraidWord word;
  for (int i = 0; i < crossings; ++i) word.push_back({1, -1});
  return braid_closure(word, {"a", "a"}).diagram;
}

void bracket_serial(benchmark::State& state) {
  ColoredDiagram d = torus_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket_serial(d));
}

void bracket_parallel(benchmark::State& state) {
  ColoredDiagram d = torus_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}

ColoredDiagram sweep_fixture() {
  // twelve crossings, four components
  return braid_closure(parse_braid_word("s1^2 s2^2 s3^2 s1^2 s2^2 s3^2"),
                       {"a", "a", "a", "a"})
      .diagram;
}

void colorations_serial(benchmark::State& state) {
  ColoredDiagram d = sweep_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(all_colorations_F_serial(d));
}

void colorations_parallel(benchmark::State& state) {
  ColoredDiagram d = sweep_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(all_colorations_F(d));
}

}  // namespace

BENCHMARK(bracket_serial)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bracket_parallel)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(colorations_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(colorations_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
