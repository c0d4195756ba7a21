// Microbenchmarks for the hot paths: truncated series products, eta
// powers, lift assembly and exact rank computation.

#include <benchmark/benchmark.h>

#include "pmf/classical.hpp"
#include "pmf/deghilb.hpp"
#include "pmf/grading.hpp"
#include "pmf/linalg.hpp"
#include "pmf/paramodular.hpp"

namespace {

void BM_QExpProduct(benchmark::State& state) {
  long t = state.range(0);
  pmf::QExp x = pmf::eisenstein(4, pmf::Rational(t)).expansion;
  pmf::QExp y = pmf::eisenstein(6, pmf::Rational(t)).expansion;
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_QExpProduct)->Arg(32)->Arg(64)->Arg(128);

void BM_EtaPower(benchmark::State& state) {
  long t = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(pmf::eta_power(24, pmf::Rational(t)));
}
BENCHMARK(BM_EtaPower)->Arg(32)->Arg(64);

void BM_EtaInverse(benchmark::State& state) {
  long t = state.range(0);
  pmf::QExp delta = pmf::eta_power(24, pmf::Rational(t)).expansion;
  pmf::QExp one(1, pmf::Rational(t));
  one.set(pmf::Rational(0), pmf::Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(pmf::divide(one, delta));
}
BENCHMARK(BM_EtaInverse)->Arg(32)->Arg(64);

void BM_GritsenkoLift(benchmark::State& state) {
  pmf::JacobiFormData phi(6, 5, "benchmark");
  // The weight-6 index-5 cusp row data used by the verification suites.
  const long rows[][3] = {{1, 0, -50}, {1, 1, 34},  {1, 2, -8}, {1, 3, -2},
                          {1, 4, 1},   {2, 0, -60}, {2, 1, 72}, {2, 2, -33},
                          {2, 3, -52}, {2, 4, 62},  {2, 5, -20}, {2, 6, 1}};
  for (const auto& r : rows) phi.insert(r[0], r[1], pmf::Rational(r[2]));
  phi.trust_to(2);
  for (auto _ : state) benchmark::DoNotOptimize(pmf::gritsenko_lift(phi, 2, 1));
}
BENCHMARK(BM_GritsenkoLift);

void BM_BiExpSquare(benchmark::State& state) {
  long t = state.range(0);
  pmf::BiExp x4 = pmf::X4(pmf::Rational(t)).expansion;
  for (auto _ : state) benchmark::DoNotOptimize(x4 * x4);
}
BENCHMARK(BM_BiExpSquare)->Arg(4)->Arg(6)->Arg(8);

void BM_DimensionByRank(benchmark::State& state) {
  long k = state.range(0);
  pmf::Rational t(8);
  std::vector<pmf::LabeledSeries<pmf::BiExp>> gens = {
      {"X2", 2, pmf::X2(t).expansion},
      {"X4", 4, pmf::X4(t).expansion},
      {"Delta6", 6, pmf::Delta6(t).expansion},
      {"X8", 8, pmf::X8(t).expansion}};
  for (auto _ : state)
    benchmark::DoNotOptimize(pmf::dimension_by_rank(gens, k));
}
BENCHMARK(BM_DimensionByRank)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
