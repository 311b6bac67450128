#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "irs/distributed.hpp"
#include "irs/errors.hpp"
#include "irs/rng.hpp"
#include "irs/twin.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irs;
using std::numbers::pi;

TEST(AlignmentRotation, WorkedExample) {
  // c1 = 0, c2 = 3pi/2: the gap is at least pi, so theta = pi/2 - min.
  const double theta = alignment_rotation(1.0, 1.0, 1.0, std::polar(1.0, 1.5 * pi));
  EXPECT_NEAR(theta, pi / 2, 1e-12);
  // c1 = pi/4, c2 = pi/2: theta = pi/2 - max = 0.
  EXPECT_NEAR(alignment_rotation(1.0, std::polar(1.0, pi / 4), 1.0, std::polar(1.0, pi / 2)), 0.0, 1e-12);
}

TEST(AlignmentRotation, NeverShrinksEitherLink) {
  SplitMix64 rng(42);
  for (int t = 0; t < 100000; ++t) {
    const Complex a1 = rng.complex_gaussian(1.0), b1 = rng.complex_gaussian(1.0);
    const Complex a2 = rng.complex_gaussian(1.0), b2 = rng.complex_gaussian(1.0);
    const Complex rot = std::polar(1.0, alignment_rotation(a1, b1, a2, b2));
    ASSERT_GE(std::abs(a1 + b1 * rot), std::abs(a1) * (1 - 1e-12));
    ASSERT_GE(std::abs(a2 + b2 * rot), std::abs(a2) * (1 - 1e-12));
  }
}

TEST(AlignmentRotation, ZeroCrossTerm) {
  EXPECT_NO_THROW(alignment_rotation(1.0, 0.0, 2.0, 0.0));
}

TEST(TwinLift, CentralizedGainsReachDistributedBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto ch = with_zero_direct(fixture::draw(10, seed));
    const auto lift = twin_lift_construction(ch);
    const auto b = gain_upper_bounds(ch, Deployment::distributed);
    ASSERT_EQ(lift.phases.angles.size(), 10u);
    for (int k = 0; k < 2; ++k) {
      EXPECT_NEAR(lift.a[k], b.ub[k], 1e-12 * b.ub[k]);
      const double gain = std::abs(oracle::centralized_channel(ch, lift.phases.angles, k));
      EXPECT_GE(gain, b.ub[k] * (1 - 1e-9)) << "seed " << seed << " user " << k;
    }
  }
}

TEST(TwinLift, RequiresZeroDirectLinks) {
  EXPECT_THROW(twin_lift_construction(fixture::draw(6, 1)), DomainError);
  EXPECT_NO_THROW(heuristic_twin_phases(fixture::draw(6, 1)));
}

TEST(TwinHeuristic, PhasesAreDistributedOptimaSideBySide) {
  const auto ch = fixture::draw(8, 3);
  const auto phases = heuristic_twin_phases(ch);
  const auto dist = optimal_phases_distributed(ch);
  ASSERT_EQ(phases.angles.size(), 8u);
  for (int m = 0; m < 4; ++m) {
    EXPECT_NEAR(phases.angles[m], wrap_angle(dist.first[m]), 1e-12);
    EXPECT_NEAR(phases.angles[4 + m], wrap_angle(dist.second[m]), 1e-12);
  }
  const auto p = fixture::uplink();
  const auto pent = heuristic_twin_region(ch, p);
  const double g1 = std::norm(oracle::centralized_channel(ch, phases.angles, 0));
  const double g2 = std::norm(oracle::centralized_channel(ch, phases.angles, 1));
  EXPECT_NEAR(pent.r1_cap, oracle::log2p1(p.user1 * g1), 1e-12);
  EXPECT_NEAR(pent.r2_cap, oracle::log2p1(p.user2 * g2), 1e-12);
  EXPECT_NEAR(pent.sum_cap, oracle::log2p1(p.user1 * g1 + p.user2 * g2), 1e-12);
}
