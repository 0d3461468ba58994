#include <benchmark/benchmark.h>

#include "phipade/approximant.hpp"
#include "phipade/phi.hpp"
#include "phipade/series.hpp"

using namespace phipade;

namespace {

PhiSpec make_spec(BigValue a, BigValue b, int m = 1) {
  PhiSpec s;
  s.a = std::move(a);
  s.b = std::move(b);
  s.m = m;
  return s;
}

void BM_RsptQuartic(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quartic_rspt_series(count));
}
BENCHMARK(BM_RsptQuartic)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PhiEval(benchmark::State& state) {
  const Context ctx(static_cast<unsigned>(state.range(0)));
  ScopedPrecision p(ctx);
  const PhiSpec s = make_spec(BigValue::ratio(2, 3), 1);
  const BigComplex z(Real("0.7"), Real("0.3"));
  for (auto _ : state) benchmark::DoNotOptimize(phi_eval(s, z, ctx));
}
BENCHMARK(BM_PhiEval)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_PhiGevreyEval(benchmark::State& state) {
  const Context ctx(30);
  ScopedPrecision p(ctx);
  const PhiSpec s = make_spec(BigValue::ratio(3, 2), 1, 2);
  const BigComplex z(Real(2));
  for (auto _ : state) benchmark::DoNotOptimize(phi_gevrey_eval(s, z, ctx));
}
BENCHMARK(BM_PhiGevreyEval)->Unit(benchmark::kMillisecond);

void BM_BuildQuartic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Context ctx(50);
  ScopedPrecision p(ctx);
  const PowerSeries s = subtract_leading(quartic_rspt_series(2 * n + 1));
  const PhiSpec spec = make_spec(BigValue::ratio(2, 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build(s, spec, n, ctx));
}
BENCHMARK(BM_BuildQuartic)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EvaluateQuartic(benchmark::State& state) {
  const Context ctx(50);
  ScopedPrecision p(ctx);
  const auto ap = build(subtract_leading(quartic_rspt_series(9)), make_spec(BigValue::ratio(2, 3), 1), 4, ctx);
  const Real g(3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_real(ap, g, ctx));
}
BENCHMARK(BM_EvaluateQuartic)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
