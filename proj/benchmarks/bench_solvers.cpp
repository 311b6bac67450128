#include <benchmark/benchmark.h>

#include <vector>

#include "irs/centralized.hpp"
#include "irs/channel.hpp"
#include "irs/region.hpp"
#include "irs/rng.hpp"
#include "irs/sdr.hpp"

namespace {

irs::ChannelRealization draw(int m) {
  return irs::sample_rayleigh_realization(irs::GeometryConfig::preset(500.0, 500.0),
                                          irs::ArraySizes::even_split(m), 7);
}

const irs::PowerConfig kUplink = irs::PowerConfig::uplink(1e12, 1e12);

void BM_AoSumRate(benchmark::State& state) {
  const auto ch = draw(static_cast<int>(state.range(0)));
  irs::SolverSettings s;
  s.ao_starts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irs::ao_sum_rate(ch, kUplink, {0.4, irs::DecodingOrder::I}, s, 1).sum_rate);
  }
}
BENCHMARK(BM_AoSumRate)->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Sdr(benchmark::State& state) {
  const auto ch = draw(static_cast<int>(state.range(0)));
  const auto prob = irs::build_sdr(ch, kUplink);
  for (auto _ : state) benchmark::DoNotOptimize(irs::solve_sdr(prob).value);
}
BENCHMARK(BM_Sdr)->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ConvexHull(benchmark::State& state) {
  irs::SplitMix64 rng(3);
  std::vector<irs::RatePair> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
  for (auto _ : state) benchmark::DoNotOptimize(irs::convex_hull(pts).size());
}
BENCHMARK(BM_ConvexHull)->Arg(200)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
