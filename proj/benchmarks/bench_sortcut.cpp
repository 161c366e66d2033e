#include <benchmark/benchmark.h>

#include <vector>

#include "random_instances.hpp"
#include "sortcut/clock.hpp"
#include "sortcut/errors.hpp"
#include "sortcut/sortcut.hpp"

using namespace sortcut;

namespace {

std::vector<BidProfile> profiles(int bidders, bool integer_supply) {
  testing::RandomInstanceOptions opts;
  opts.min_bidders = bidders;
  opts.max_bidders = bidders;
  opts.integer_supply = integer_supply;
  testing::InstanceGenerator gen(static_cast<std::uint64_t>(bidders) * 31 + integer_supply, opts);
  std::vector<BidProfile> out;
  for (int i = 0; i < 64; ++i) out.push_back(BidProfile::truthful(gen.next()));
  return out;
}

void BM_Clear(benchmark::State& state) {
  const auto ps = profiles(static_cast<int>(state.range(0)), false);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(clear(ps[i++ % ps.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Clear)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_DemandAt(benchmark::State& state) {
  const auto ps = profiles(static_cast<int>(state.range(0)), false);
  std::vector<Rational> xs;
  for (const auto& p : ps) xs.push_back(p.truth().total_budget() / 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % ps.size();
    benchmark::DoNotOptimize(demand_at(ps[k], xs[k]));
  }
}
BENCHMARK(BM_DemandAt)->RangeMultiplier(2)->Range(2, 64);

void BM_AllocateIndivisible(benchmark::State& state) {
  const auto ps = profiles(static_cast<int>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(allocate_indivisible(ps[i++ % ps.size()]));
    } catch (const IndivisibleClearingError&) {
    }
  }
}
BENCHMARK(BM_AllocateIndivisible)->RangeMultiplier(2)->Range(2, 16);

void BM_ClearingPrice(benchmark::State& state) {
  const auto ps = profiles(static_cast<int>(state.range(0)), false);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(clearing_price(ps[i++ % ps.size()]));
}
BENCHMARK(BM_ClearingPrice)->RangeMultiplier(2)->Range(2, 64);

}  // namespace

BENCHMARK_MAIN();
