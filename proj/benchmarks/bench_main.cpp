#include "cantor4/cuntz.hpp"
#include "cantor4/frames.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cantor4;

namespace {

void BM_Mu4Hat(benchmark::State& state) {
  double t = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu4_hat(t));
    t += 1.0;
  }
}
BENCHMARK(BM_Mu4Hat);

void BM_InnerProduct(benchmark::State& state) {
  std::mt19937_64 rng(7);
  RandomSumOptions opts;
  opts.max_level = static_cast<int>(state.range(0));
  const FunctionSum f = random_function_sum(rng, opts);
  const FunctionSum g = random_function_sum(rng, opts);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(f, g));
}
BENCHMARK(BM_InnerProduct)->Arg(2)->Arg(6);

void BM_Gram(benchmark::State& state) {
  const CuntzRep rep(filter_bank_from_A(hadamard_rho(cplx(0.0, 1.0))));
  for (auto _ : state) benchmark::DoNotOptimize(gram_X4(rep, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Gram)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ParsevalTrace(benchmark::State& state) {
  const WeightSpec spec = WeightSpec::from_rho(cplx(0.0, 1.0));
  const ExponentialSum f{{1.0, 1.0}, {0.5, 4.0}};
  for (auto _ : state) benchmark::DoNotOptimize(parseval_trace(f, spec, 4096));
}
BENCHMARK(BM_ParsevalTrace)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
