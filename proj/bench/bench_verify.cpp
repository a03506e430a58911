// Serial reference path against the OpenMP sweep on the same cases.
#include <benchmark/benchmark.h>

#include "kmh/affine_hecke.hpp"
#include "kmh/random_elements.hpp"
#include "kmh/verify.hpp"

namespace {

kmh::Datum affine_a2() {
  return kmh::make_datum(kmh::RootDatum::standard(
      kmh::Gcm::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})));
}

kmh::SweepConfig config(kmh::Execution exec) {
  kmh::SweepConfig c;
  c.trials = 100;
  c.exec = exec;
  return c;
}

void BM_CrossRelation(benchmark::State& state) {
  auto d = affine_a2();
  auto c = config(state.range(0) ? kmh::Execution::parallel : kmh::Execution::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(kmh::check_cross_relation(d, c));
}

void BM_AffineAssociativity(benchmark::State& state) {
  auto d = affine_a2();
  auto c = config(state.range(0) ? kmh::Execution::parallel : kmh::Execution::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(kmh::check_affine_associativity(d, c));
}

void BM_FullSuite(benchmark::State& state) {
  auto d = affine_a2();
  auto c = config(state.range(0) ? kmh::Execution::parallel : kmh::Execution::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(kmh::run_suite(d, c));
}

void BM_AffineMultiply(benchmark::State& state) {
  auto d = affine_a2();
  kmh::ElementSampler sampler(d, 1);
  auto a = sampler.affine();
  auto b = sampler.affine();
  for (auto _ : state)
    benchmark::DoNotOptimize(multiply(a, b));
}

} // namespace

// Argument 0 is the serial path, 1 the OpenMP one.
BENCHMARK(BM_CrossRelation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AffineAssociativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_AffineMultiply)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
