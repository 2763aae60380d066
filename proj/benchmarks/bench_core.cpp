#include <benchmark/benchmark.h>

#include "unlattice/convergence.hpp"
#include "unlattice/extraction.hpp"
#include "unlattice/gallery.hpp"

using namespace unlattice;

namespace {

// Step function with `pieces` equal pieces and alternating signs.
StepFn staircase(int pieces) {
  std::vector<Rational> cuts, values;
  for (int i = 0; i <= pieces; ++i) cuts.push_back(ratio(i, pieces));
  for (int i = 0; i < pieces; ++i) values.push_back(ratio((i % 2 ? -1 : 1) * (i + 1), 7));
  return StepFn(std::move(cuts), std::move(values));
}

void BM_StepMeet(benchmark::State& state) {
  const Element a = staircase(static_cast<int>(state.range(0)));
  const Element b = staircase(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(meet(a, b));
}
BENCHMARK(BM_StepMeet)->Arg(4)->Arg(32)->Arg(256);

void BM_GaugeL2(benchmark::State& state) {
  const SpacePair pair = build_pair("L2@L0");
  const Element y = staircase(static_cast<int>(state.range(0)));
  const Element x = abs_val(staircase(static_cast<int>(state.range(0)) + 3));
  for (auto _ : state) benchmark::DoNotOptimize(gauge(y, x, pair));
}
BENCHMARK(BM_GaugeL2)->Arg(4)->Arg(32)->Arg(256);

void BM_GaugeTypewriter(benchmark::State& state) {
  const Family tw = family("typewriter");
  const SpacePair pair = build_pair("L1@L0");
  const Element one = StepFn::constant(Rational(1));
  Index n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauge(tw(n), one, pair));
    n = n % 4096 + 1;
  }
}
BENCHMARK(BM_GaugeTypewriter);

void BM_CheckUn(benchmark::State& state, const char* fam, const char* pair) {
  const Family f = family(fam);
  const SpacePair p = build_pair(pair);
  for (auto _ : state) benchmark::DoNotOptimize(check_un(f, p));
}
BENCHMARK_CAPTURE(BM_CheckUn, unit_vectors_l1, "unit_vectors", "l1@RN")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckUn, typewriter_L1, "typewriter", "L1@L0")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckUn, moving_bump_X0, "moving_bump", "X0@C01")->Unit(benchmark::kMillisecond);

void BM_ExtractTypewriter(benchmark::State& state) {
  const Family tw = family("typewriter");
  ExtractionOptions opts;
  opts.sample_points = 1000;
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_ae_subsequence(tw, *tw.measure_cert, k, opts));
}
BENCHMARK(BM_ExtractTypewriter)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
