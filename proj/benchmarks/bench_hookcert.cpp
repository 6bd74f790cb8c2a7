#include <benchmark/benchmark.h>

#include "hookcert/claims.hpp"
#include "hookcert/enumerate.hpp"
#include "hookcert/lemmas.hpp"
#include "hookcert/target_matcher.hpp"

using namespace hookcert;

namespace {

const PrimeTables& tables() {
  static const PrimeTables t(2'400'000);
  return t;
}

void BM_MatcherResidue(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = 2 * k + 1;
  const TargetMatcher matcher(targets(k, Parity::odd, tables()), n, tables());
  const Partition lambda = witness_partition(k, Parity::odd);
  const Partition cols = conjugate(lambda);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matcher.residue(lambda.parts(), cols.parts()));
  }
}
BENCHMARK(BM_MatcherResidue)->Arg(35)->Arg(120)->Arg(337);

void BM_AllPartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AllPartitions all(n);
    std::int64_t count = 0;
    while (all.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AllPartitions)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_NaiveMatch(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_verify(k, Parity::odd, tables()).partitions);
  }
}
BENCHMARK(BM_NaiveMatch)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_PartitionsBetween(benchmark::State& state) {
  const Partition lower{20, 6, 3, 1};
  const Partition upper{30, 12, 8, 6, 4, 2, 2, 1, 1};
  for (auto _ : state) {
    PartitionsBetween s(48, lower, upper);
    std::int64_t count = 0;
    while (s.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionsBetween);

void BM_PrunedFact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_fact(k, Parity::odd, tables()).status);
  }
}
BENCHMARK(BM_PrunedFact)->Arg(100)->Arg(337)->Unit(benchmark::kMillisecond);

void BM_GapScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_prime_gaps(kLemmaScanMin, kLemmaScanMax, tables()).size());
  }
}
BENCHMARK(BM_GapScan)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) {
    const PrimeTables t(state.range(0));
    benchmark::DoNotOptimize(t.pi(t.bound()));
  }
}
BENCHMARK(BM_Sieve)->Arg(2'400'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
