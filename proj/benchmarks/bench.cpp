#include <benchmark/benchmark.h>

#include "monocert/builtins.hpp"
#include "monocert/certify.hpp"
#include "monocert/counterexample.hpp"
#include "monocert/expr.hpp"

namespace {

using namespace monocert;

void BM_EvalJet(benchmark::State& state) {
  const Expr e = parse(builtins::kFPlusText);
  Vec2 p{0.3, -1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_jet(e, p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_EvalJet);

void BM_Eval(benchmark::State& state) {
  const Expr e = parse(builtins::kFPlusText);
  Vec2 p{0.3, -1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(e, p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_Eval);

void BM_CertifyMonotone(benchmark::State& state) {
  const VectorField2 f = builtins::F_plus();
  const GridSpec grid{static_cast<std::size_t>(state.range(0)),
                      static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(certify_monotone(f, {}, grid));
}
BENCHMARK(BM_CertifyMonotone)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);

void BM_RefuteSkewAffine(benchmark::State& state) {
  const VectorField2 f = builtins::F_plus();
  for (auto _ : state) benchmark::DoNotOptimize(refute_skew_affine(f, {}, {}));
}
BENCHMARK(BM_RefuteSkewAffine)->Unit(benchmark::kMillisecond);

void BM_RefuteAdditivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(refute_additivity(builtins::kSinProduct));
}
BENCHMARK(BM_RefuteAdditivity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
