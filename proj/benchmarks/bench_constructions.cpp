#include <benchmark/benchmark.h>

#include "mubkit/cyclotomic.hpp"
#include "mubkit/entangle.hpp"
#include "mubkit/mub.hpp"

namespace {

void BM_CyclotomicMul(benchmark::State& state) {
  const auto order = static_cast<unsigned long>(state.range(0));
  auto a = mubkit::CyclotomicInt::root_of_unity(order, 1) +
           mubkit::CyclotomicInt::from_integer(order, 2);
  auto b = mubkit::CyclotomicInt::root_of_unity(order, order - 1) -
           mubkit::CyclotomicInt::from_integer(order, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(3)->Arg(4)->Arg(12)->Arg(60);

void BM_MubConstruct(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mubkit::mub_auto(d));
}
BENCHMARK(BM_MubConstruct)->Arg(5)->Arg(8)->Arg(9)->Arg(16)->Arg(27);

void BM_MubVerify(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto set = mubkit::mub_auto(d);
  for (auto _ : state) benchmark::DoNotOptimize(mubkit::verify_mub_set(set));
}
BENCHMARK(BM_MubVerify)->Arg(5)->Arg(8)->Arg(9)->Arg(16);

void BM_BellVerify(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto family = mubkit::bell_auto(d);
  for (auto _ : state) benchmark::DoNotOptimize(mubkit::verify_bell_family(family));
}
BENCHMARK(BM_BellVerify)->Arg(2)->Arg(4)->Arg(6);

void BM_PartialTrace(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto family = mubkit::bell_auto(d);
  const auto& v = family.state(1, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(mubkit::partial_trace_second(v, d, d));
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
