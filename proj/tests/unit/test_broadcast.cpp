#include <gtest/gtest.h>

#include <cmath>

#include "irs/broadcast.hpp"
#include "irs/distributed.hpp"
#include "irs/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irs;

namespace {

// max over a p_first grid of the profile rate with p_second = P - p_first.
double p6_grid(double a1, double a2, double total, double noise, double alpha, int points) {
  double best = 0.0;
  for (int i = 0; i <= points; ++i) {
    const double p = total * i / points;
    best = std::max(best, oracle::profile_rate(p * a1 * a1 / noise, (total - p) * a2 * a2 / noise, alpha));
  }
  return best;
}

}  // namespace

TEST(BcPowerSplit, MatchesGridSearch) {
  const double cases[][5] = {{1.0, 1.0, 10.0, 1.0, 0.5},
                             {0.3, 2.0, 100.0, 1.0, 0.2},
                             {2.0, 0.1, 1e3, 2.0, 0.8},
                             {1e-6, 3e-6, 1e12, 1.0, 0.5},
                             {1.0, 1.0, 5.0, 1.0, 0.0}};
  for (const auto& c : cases) {
    const auto res = solve_p6_power_subproblem(c[0], c[1], c[2], c[3], c[4]);
    const double grid = p6_grid(c[0], c[1], c[2], c[3], c[4], 10000);
    EXPECT_GE(res.sum_rate, grid - 1e-9);
    EXPECT_NEAR(res.sum_rate, grid, 1e-3 * (1 + grid));
    EXPECT_LE(res.power[0] + res.power[1], c[2] * (1 + 1e-12));
    EXPECT_NEAR(res.beta, std::exp2((1 - c[4]) * res.sum_rate), 1e-9 * res.beta);
    // The returned powers meet the closed-form demands at beta.
    const double need_first = (std::pow(res.beta, 1 / (1 - c[4])) - res.beta) * c[3] / (c[0] * c[0]);
    const double need_second = (res.beta - 1) * c[3] / (c[1] * c[1]);
    EXPECT_NEAR(res.power[0], need_first, 1e-6 * (1 + need_first));
    EXPECT_NEAR(res.power[1], need_second, 1e-6 * (1 + need_second));
  }
}

TEST(BcPowerSplit, EdgeCases) {
  const auto zero = solve_p6_power_subproblem(1.0, 1.0, 0.0, 1.0, 0.5);
  EXPECT_EQ(zero.sum_rate, 0.0);
  EXPECT_EQ(zero.beta, 1.0);
  EXPECT_THROW(solve_p6_power_subproblem(1.0, 1.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(solve_p6_power_subproblem(1.0, 1.0, 1.0, 0.0, 0.5), DomainError);
}

TEST(Duality, PowerSplitGrid) {
  const auto dl = PowerConfig::downlink(8.0, 2.0);
  const auto splits = duality_power_splits(dl, 5);
  ASSERT_EQ(splits.size(), 5u);
  for (std::size_t i = 0; i < splits.size(); ++i) {
    EXPECT_DOUBLE_EQ(splits[i].user1 + splits[i].user2, 8.0);
    EXPECT_DOUBLE_EQ(splits[i].user1, 2.0 * i);
    EXPECT_EQ(splits[i].noise, 2.0);
  }
}

TEST(BcDistributed, EndpointsAndChain) {
  const auto ch = fixture::draw(10, 4);
  const auto dl = fixture::downlink();
  const auto s = fixture::fast_settings();
  const auto cap = bc_capacity_region_distributed(ch, dl, s);
  const auto tdma = bc_tdma_distributed(ch, dl, s);
  const auto fdma = bc_fdma_distributed(ch, dl, s);
  const auto b = gain_upper_bounds(ch, Deployment::distributed);
  EXPECT_NEAR(cap.max_r1(), oracle::log2p1(dl.total * b.ub[0] * b.ub[0]), 1e-12);
  EXPECT_NEAR(cap.max_r2(), oracle::log2p1(dl.total * b.ub[1] * b.ub[1]), 1e-12);
  EXPECT_TRUE(contains(fdma, tdma, 1e-9));
  EXPECT_TRUE(contains(cap, fdma, 1e-9));
  EXPECT_NEAR(tdma.max_r1(), cap.max_r1(), 1e-12);
}

TEST(BcDistributed, PowerGridRefinementGrows) {
  // The 11-point split grid is a subset of the 21-point one.
  const auto ch = fixture::draw(10, 5);
  auto s = fixture::fast_settings();
  const auto coarse = bc_capacity_region_distributed(ch, fixture::downlink(), s);
  s.power_grid = 21;
  const auto fine = bc_capacity_region_distributed(ch, fixture::downlink(), s);
  EXPECT_TRUE(contains(fine, coarse, 1e-12));
}

TEST(BcCentralized, InnerOuterSandwich) {
  const auto dl = fixture::downlink();
  const auto s = fixture::fast_settings();
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto ch = fixture::draw(12, seed);
    const auto inner = bc_inner_bound_centralized(ch, dl, s);
    const auto outer = bc_outer_bound_centralized(ch, dl, s);
    const auto tdma = bc_tdma_centralized(ch, dl, s);
    const auto fdma = bc_fdma_inner_centralized(ch, dl, s);
    EXPECT_TRUE(contains(outer, inner, 1e-6));
    EXPECT_TRUE(contains(fdma, tdma, 1e-6));
    EXPECT_TRUE(contains(outer, fdma, 1e-6));
    const auto b = gain_upper_bounds(ch, Deployment::centralized);
    EXPECT_NEAR(inner.max_r1(), oracle::log2p1(dl.total * b.ub[0] * b.ub[0]), 1e-9);
  }
}

TEST(BcCentralized, AoHistoryMonotoneAndPowersFeasible) {
  const auto ch = fixture::draw(16, 6);
  const auto dl = fixture::downlink();
  for (double a : {0.1, 0.5, 0.9}) {
    for (auto order : {DecodingOrder::I, DecodingOrder::II}) {
      const auto run = bc_ao_sum_rate(ch, dl, {a, order}, fixture::fast_settings(), 7);
      for (std::size_t i = 1; i < run.state.beta_history.size(); ++i) {
        EXPECT_GE(run.state.beta_history[i], run.state.beta_history[i - 1] - 1e-12);
      }
      // The rate is reachable with the best power split for the returned phases.
      const double g1 = std::abs(oracle::centralized_channel(ch, run.state.angles, 0));
      const double g2 = std::abs(oracle::centralized_channel(ch, run.state.angles, 1));
      const RateProfileProblem prob{a, order};
      const double gf = prob.first_user() == 0 ? g1 : g2;
      const double gs = prob.first_user() == 0 ? g2 : g1;
      const double grid = p6_grid(gf, gs, dl.total, dl.noise, prob.alpha_first(), 20000);
      EXPECT_NEAR(run.sum_rate, grid, 1e-3 * (1 + grid));
    }
  }
}

TEST(BcCentralized, FdmaHistoryMonotone) {
  const auto ch = fixture::draw(8, 9);
  const auto run = bc_fdma_profile(ch, fixture::downlink(), 0.4, fixture::fast_settings(), 3);
  for (std::size_t i = 1; i < run.rate_history.size(); ++i) {
    EXPECT_GE(run.rate_history[i], run.rate_history[i - 1] - 1e-12);
  }
  EXPECT_LE(run.power[0] + run.power[1], fixture::downlink().total * (1 + 1e-9));
}
