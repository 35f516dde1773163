#include <benchmark/benchmark.h>

#include <random>

#include "hhq/identity_audit.hpp"
#include "hhq/sequences.hpp"

namespace {

using namespace hhq;

HybridQuaternion<Rational> random_hq(std::mt19937_64& rng, std::int64_t magnitude) {
  std::uniform_int_distribution<long> num(-magnitude, magnitude), den(1, 100);
  std::array<Rational, 16> c;
  for (auto& x : c) x = Rational(Integer(num(rng)), Integer(den(rng)));
  return HybridQuaternion<Rational>(c);
}

void BM_HqMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto x = random_hq(rng, state.range(0)), y = random_hq(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_HqMul)->Arg(10)->Arg(1'000'000);

void BM_HqMulQuaternionUnitForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto x = random_hq(rng, 1000), y = random_hq(rng, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(mul_quaternion_unit_form(x, y));
}
BENCHMARK(BM_HqMulQuaternionUnitForm);

void BM_HqMulFibonacciLifts(benchmark::State& state) {
  HoradamParams fib{0, 1, 1, -1};
  auto table = HoradamTable::for_lifts(fib, {0, state.range(0)});
  auto x = table.hybrid_quaternion(state.range(0)), y = table.hybrid_quaternion(state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_HqMulFibonacciLifts)->Arg(10)->Arg(1000);

void BM_HoradamTable(benchmark::State& state) {
  HoradamParams pell{0, 1, 2, -1};
  for (auto _ : state) benchmark::DoNotOptimize(HoradamTable(pell, -state.range(0), state.range(0)));
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}
BENCHMARK(BM_HoradamTable)->Arg(100)->Arg(10'000);

void BM_BinetHybridQuaternion(benchmark::State& state) {
  auto data = binet_data(HoradamParams{0, 1, 1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(binet_hybrid_quaternion(data, state.range(0)));
}
BENCHMARK(BM_BinetHybridQuaternion)->Arg(10)->Arg(100);

void BM_AuditAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(audit_all({-10, 30}));
}
BENCHMARK(BM_AuditAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
