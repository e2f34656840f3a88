#include <benchmark/benchmark.h>

#include "coxlink/localization.hpp"
#include "coxlink/mfcheck.hpp"

using namespace coxlink;

namespace {

void BM_FixedPointTerms(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> k(n - 1, 1);
  for (auto _ : state) {
    auto terms = localization::fixed_point_terms(n, k, {}, weights::WeightConvention::TorusAction, ex);
    benchmark::DoNotOptimize(terms);
  }
}

void BM_SumTerms(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  auto terms = localization::fixed_point_terms(n, std::vector<int>(n - 1, 1), {}, weights::WeightConvention::TorusAction);
  for (auto _ : state) {
    auto sum = ex == Execution::Serial ? localization::sum_terms_serial(terms)
                                       : localization::sum_terms_parallel(terms, ex);
    benchmark::DoNotOptimize(sum);
  }
}

void BM_Mfcheck(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = mfcheck::run_samples(n, 200, 0, ex);
    benchmark::DoNotOptimize(rep);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_FixedPointTerms, serial, Execution::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FixedPointTerms, parallel, Execution::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SumTerms, serial, Execution::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SumTerms, parallel, Execution::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Mfcheck, serial, Execution::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Mfcheck, parallel, Execution::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
