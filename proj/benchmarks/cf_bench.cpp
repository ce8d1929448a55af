#include <benchmark/benchmark.h>

#include "cf/checks.hpp"
#include "cf/evaluator.hpp"
#include "cf/fib.hpp"
#include "cf/metric.hpp"
#include "cf/rng.hpp"
#include "cf/topology.hpp"

using namespace cf;

namespace {

Word make_word(long len, long seed) {
  SplitMix64 rng(static_cast<std::uint64_t>(seed));
  std::vector<BigInt> block;
  for (long i = 0; i < len; ++i)
    block.emplace_back(rng.range(1, 50));
  return Word(std::move(block));
}

void BM_expand(benchmark::State& state) {
  const Rational x(BigInt(355687), BigInt(1000000));
  for (auto _ : state)
    benchmark::DoNotOptimize(expand(x));
}
BENCHMARK(BM_expand);

void BM_eval_word(benchmark::State& state) {
  const Seq s(make_word(state.range(0), 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_exact(s));
}
BENCHMARK(BM_eval_word)->Arg(8)->Arg(32)->Arg(128);

void BM_convergents(benchmark::State& state) {
  const Seq s(make_word(state.range(0), 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(Convergents(s, state.range(0)));
}
BENCHMARK(BM_convergents)->Arg(8)->Arg(32)->Arg(128);

void BM_dist_words(benchmark::State& state) {
  const Seq a(make_word(12, 3));
  const Seq b(make_word(12, 4));
  for (auto _ : state)
    benchmark::DoNotOptimize(finite_dist(a, b));
}
BENCHMARK(BM_dist_words);

void BM_dist_stream_bracket(benchmark::State& state) {
  const Seq a(make_word(6, 5));
  const Seq b(Stream({2}, {1, 3}, state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dist(a, b));
}
BENCHMARK(BM_dist_stream_bracket)->Arg(10)->Arg(30);

void BM_fib(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fib(state.range(0)));
}
BENCHMARK(BM_fib)->Arg(70)->Arg(500);

void BM_preimage_search(benchmark::State& state) {
  const Rational x(BigInt(89), BigInt(144));
  for (auto _ : state)
    benchmark::DoNotOptimize(preimage_search(x, 12, BigInt(288)));
}
BENCHMARK(BM_preimage_search);

void BM_roundtrip_q100(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_roundtrip(100));
}
BENCHMARK(BM_roundtrip_q100);

} // namespace

BENCHMARK_MAIN();
