#include <benchmark/benchmark.h>

#include <random>

#include "cvxlat/analysis.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/segment_ground.hpp"
#include "cvxlat/verify/random.hpp"

using namespace cvxlat;

namespace {

FiniteGround ground(std::size_t n) {
  std::mt19937_64 rng(42);
  return FiniteGround(verify::random_points(rng, n, 2, 6));
}

void BM_EnumerateParallel(benchmark::State& st) {
  const auto x = ground(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(closure_lattice(HullClosure(x, true)).size());
}

void BM_EnumerateSerial(benchmark::State& st) {
  const auto x = ground(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(closure_lattice(HullClosure(x, false)).size());
}

void BM_ClosureParallel(benchmark::State& st) {
  const auto x = ground(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(closure(0b111, x));
}

void BM_ClosureSerial(benchmark::State& st) {
  const auto x = ground(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(closure_serial(0b111, x));
}

void BM_JsdParallel(benchmark::State& st) {
  const auto l = enumerate_closed_sets(ground(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(check_jsd(l).holds);
}

void BM_JsdReference(benchmark::State& st) {
  const auto l = enumerate_closed_sets(ground(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(check_jsd_reference(l).holds);
}

SegmentUnionGround segments() {
  return SegmentUnionGround({Segment(QPoint{-1, 0}, QPoint{1, 0}), Segment(QPoint{-1, 0}, QPoint{0, 2}),
                             Segment(QPoint{1, 0}, QPoint{0, 2}), Segment(QPoint{0, 0}, QPoint{0, 1})});
}

std::vector<SdvTriple> triples(const SegmentUnionGround& x, std::size_t n) {
  std::mt19937_64 rng(7);
  std::vector<SdvTriple> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({random_closed_set(x, rng), random_closed_set(x, rng), random_closed_set(x, rng)});
  return out;
}

void BM_SdvParallel(benchmark::State& st) {
  const auto x = segments();
  const auto t = triples(x, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sdv_spot_check(x, t).holds);
}

void BM_SdvSerial(benchmark::State& st) {
  const auto x = segments();
  const auto t = triples(x, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sdv_spot_check_serial(x, t).holds);
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Arg(12)->Arg(20);
BENCHMARK(BM_ClosureSerial)->Arg(12)->Arg(20);
BENCHMARK(BM_JsdParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_JsdReference)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SdvParallel)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SdvSerial)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
