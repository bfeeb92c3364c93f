#include <benchmark/benchmark.h>

#include "cubicgap/families.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/matrix.hpp"
#include "cubicgap/named_graphs.hpp"
#include "cubicgap/roots.hpp"

using namespace cubicgap;

namespace {

// Adjacency of X(k), 6k vertices.
IntMatrix xn_adjacency(benchmark::State& state) {
  return IntMatrix::adjacency(build_xn(static_cast<std::size_t>(state.range(0))));
}

void BM_CharPolyBerkowitz(benchmark::State& state) {
  const IntMatrix a = xn_adjacency(state);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_berkowitz(a));
  state.SetLabel(std::to_string(a.size()) + " vertices");
}
BENCHMARK(BM_CharPolyBerkowitz)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CharPolyMultimodular(benchmark::State& state) {
  const IntMatrix a = xn_adjacency(state);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_multimodular(a));
  state.SetLabel(std::to_string(a.size()) + " vertices");
}
BENCHMARK(BM_CharPolyMultimodular)->Arg(2)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DetBareiss(benchmark::State& state) {
  const IntMatrix m = m_matrix(build_xn(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_DetBareiss)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SturmGapCount(benchmark::State& state) {
  const IntPolynomial p = char_poly(IntMatrix::adjacency(build_xn(static_cast<std::size_t>(state.range(0)))));
  const Interval gap = open_gap();
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_in(p, gap, true));
}
BENCHMARK(BM_SturmGapCount)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_XnGapReport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xn_gap_report(n));
}
BENCHMARK(BM_XnGapReport)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_IsPsd(benchmark::State& state) {
  const IntMatrix m = m_matrix(generalized_petersen(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(is_psd(m));
}
BENCHMARK(BM_IsPsd)->Arg(5)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
