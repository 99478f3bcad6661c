// Serial reference kernels against their OpenMP counterparts.
// The parallel side uses OpenMP's default thread count (OMP_NUM_THREADS).

#include <benchmark/benchmark.h>

#include <map>

#include "ekcodes/designs.hpp"
#include "ekcodes/search.hpp"
#include "ekcodes/verify.hpp"

namespace {

const ekc::Code& sample_code(int n) {
  static std::map<int, ekc::Code> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    ekc::GreedyOptions o;
    o.n = n;
    o.k = 2;
    o.d = 3;
    o.seed = 1;
    it = cache.emplace(n, ekc::greedy_code(o)).first;
  }
  return it->second;
}

void BM_MinDistanceSerial(benchmark::State& state) {
  const auto& code = sample_code(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ekc::min_distance_serial(code));
  state.counters["words"] = static_cast<double>(code.size());
}

void BM_MinDistanceParallel(benchmark::State& state) {
  const auto& code = sample_code(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ekc::min_distance(code));
  state.counters["words"] = static_cast<double>(code.size());
  state.counters["threads"] = ekc::thread_count();
}

void BM_VerifyDesignSerial(benchmark::State& state) {
  const auto design = ekc::zero_sum_quadruples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ekc::verify_design_serial(design));
  state.counters["blocks"] = static_cast<double>(design.blocks.size());
}

void BM_VerifyDesignParallel(benchmark::State& state) {
  const auto design = ekc::zero_sum_quadruples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ekc::verify_design(design));
  state.counters["blocks"] = static_cast<double>(design.blocks.size());
  state.counters["threads"] = ekc::thread_count();
}

}  // namespace

BENCHMARK(BM_MinDistanceSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyDesignSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyDesignParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
