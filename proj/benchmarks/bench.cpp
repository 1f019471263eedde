#include <benchmark/benchmark.h>

#include "rbl/cybe/cybe.hpp"
#include "rbl/oracle/finite_field.hpp"
#include "rbl/prelie/prelie.hpp"
#include "rbl/rb/rota_baxter.hpp"
#include "rbl/scalar/text.hpp"

using namespace rbl;

static void BM_RatFunArithmetic(benchmark::State& state) {
  RatFun x = parse_ratfun("(1+16*a*b^3)/(16*b^2)");
  RatFun y = parse_ratfun("(16*a*b^3-1)/(4*b)");
  for (auto _ : state) benchmark::DoNotOptimize(x * y + x / y);
}
BENCHMARK(BM_RatFunArithmetic);

static void BM_CheckRbP22(benchmark::State& state) {
  OperatorMatrix p = catalog_entry("P22").op();
  for (auto _ : state) benchmark::DoNotOptimize(check_rb(p).ok);
}
BENCHMARK(BM_CheckRbP22);

static void BM_CatalogExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog_exact(catalog()));
}
BENCHMARK(BM_CatalogExact)->Unit(benchmark::kMillisecond);

static void BM_CybeLift(benchmark::State& state) {
  Tensor2 r = rb_to_cybe(catalog_entry("P22").op());
  for (auto _ : state) benchmark::DoNotOptimize(cybe_lhs(r));
}
BENCHMARK(BM_CybeLift)->Unit(benchmark::kMillisecond);

static void BM_ClassTable(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& row : class_table()) benchmark::DoNotOptimize(verify_class_row(row).ok);
  }
}
BENCHMARK(BM_ClassTable)->Unit(benchmark::kMillisecond);

static void BM_FpEnumerate(benchmark::State& state) {
  auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rb_fp(p, 1).size());
}
BENCHMARK(BM_FpEnumerate)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
