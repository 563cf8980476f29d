#include <benchmark/benchmark.h>

#include "advkit/advsdp.hpp"
#include "advkit/funcore.hpp"
#include "advkit/randsearch/search.hpp"
#include "advkit/rng.hpp"
#include "advkit/strings/kcs.hpp"

namespace {

using namespace advkit;

strings::SymbolString random_string(CounterRng& rng, std::size_t n, std::size_t alphabet) {
  strings::SymbolString x(n);
  for (auto& s : x) s = static_cast<strings::Symbol>(rng.uniform(alphabet));
  return x;
}

void BM_AdvOr(benchmark::State& state) {
  FiniteFunction f = functions::or_n(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adv_value(f).upper);
}
BENCHMARK(BM_AdvOr)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LcsLength(benchmark::State& state) {
  CounterRng rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  auto x = random_string(rng, n, 4);
  auto y = random_string(rng, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(strings::lcs_length(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsLength)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_CompositeDp(benchmark::State& state) {
  CounterRng rng(2);
  auto n = static_cast<std::size_t>(state.range(0));
  auto x = random_string(rng, n, 4);
  auto y = random_string(rng, n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        strings::composite_decide(x, y, 3, 7, strings::Split::balanced, strings::CompositeMode::dp));
  }
}
BENCHMARK(BM_CompositeDp)->Arg(14)->Arg(28)->Arg(56)->Arg(112);

void BM_RandomizedSearch(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<randsearch::Value> S(n);
  for (std::size_t i = 0; i < n; ++i) S[i] = static_cast<randsearch::Value>(i + 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto r = randsearch::randomized_search(S, static_cast<randsearch::Value>(n * 7 / 10), {}, seed++);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_RandomizedSearch)->RangeMultiplier(10)->Range(100, 100000);

}  // namespace

BENCHMARK_MAIN();
