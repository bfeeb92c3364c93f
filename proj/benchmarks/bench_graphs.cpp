#include <benchmark/benchmark.h>

#include "cubicgap/canonical.hpp"
#include "cubicgap/cubic_enum.hpp"
#include "cubicgap/families.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/local_structure.hpp"
#include "cubicgap/named_graphs.hpp"

using namespace cubicgap;

namespace {

void BM_CanonicalXn(benchmark::State& state) {
  // Highly symmetric: orbit pruning does most of the work.
  const Graph g = build_xn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalXn)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_CanonicalTutte8(benchmark::State& state) {
  const Graph g = tutte_eight_cage();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalTutte8)->Unit(benchmark::kMicrosecond);

void BM_EnumerateCubic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = count_cubic(EnumSpec{n});
    benchmark::DoNotOptimize(count);
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateCubic)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_WitnessSearch(benchmark::State& state) {
  const Graph g = generalized_petersen(13, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_negative_witness(g, 6));
}
BENCHMARK(BM_WitnessSearch)->Unit(benchmark::kMillisecond);

void BM_Girth5Configurations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_girth5_extensions());
}
BENCHMARK(BM_Girth5Configurations)->Unit(benchmark::kMillisecond);

}  // namespace
