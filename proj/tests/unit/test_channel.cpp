#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "irs/centralized.hpp"
#include "irs/distributed.hpp"
#include "irs/errors.hpp"
#include "irs/rng.hpp"
#include "irs/serialize.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irs;
using std::numbers::pi;

TEST(PathLoss, UnitDistance) { EXPECT_DOUBLE_EQ(path_loss(1.0, 3.0, 1e-3), 1e-3); }

TEST(PathLoss, TenMetresAtMinus30dB) { EXPECT_NEAR(path_loss(10.0, 3.0, db_to_linear(-30.0)), 1e-6, 1e-18); }

TEST(PathLoss, InverseSquare) { EXPECT_DOUBLE_EQ(path_loss(2.0, 2.0, 1.0), 0.25); }

TEST(PathLoss, NonPositiveDistanceThrows) {
  EXPECT_THROW(path_loss(0.0, 3.0, 1e-3), DomainError);
  EXPECT_THROW(path_loss(-1.0, 3.0, 1e-3), DomainError);
}

TEST(Geometry, PresetLayout) {
  const auto g = GeometryConfig::preset(500.0, 200.0);
  EXPECT_DOUBLE_EQ(g.ap.z, 10.0);
  EXPECT_DOUBLE_EQ(g.users[0].x, 500.0);
  EXPECT_DOUBLE_EQ(g.users[1].x, -200.0);
  EXPECT_DOUBLE_EQ(g.users[0].z, 1.0);
  EXPECT_DOUBLE_EQ(g.central_irs.z, 9.0);
  EXPECT_DOUBLE_EQ(g.distributed_irs[1].x, -200.0);
  EXPECT_DOUBLE_EQ(g.distributed_irs[1].z, 2.0);
  EXPECT_DOUBLE_EQ(g.horizontal_distance(1), 200.0);
}

TEST(Sampling, SameSeedBitIdentical) {
  const auto a = fixture::draw(8, 99);
  const auto b = fixture::draw(8, 99);
  EXPECT_EQ(a.direct, b.direct);
  EXPECT_EQ(a.cent_irs_to_ap, b.cent_irs_to_ap);
  EXPECT_EQ(a.cent_user_to_irs[1], b.cent_user_to_irs[1]);
  EXPECT_EQ(a.dist_irs_to_ap[0], b.dist_irs_to_ap[0]);
  EXPECT_NE(a.direct[0], fixture::draw(8, 100).direct[0]);
}

TEST(Sampling, SecondMomentMatchesPathLoss) {
  const auto g = GeometryConfig::preset(100.0, 100.0);
  const auto pl = link_path_loss(g);
  const int n = 100000;
  double direct = 0.0;
  double reflected = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto ch = sample_rayleigh_realization(g, {2, 1, 1}, static_cast<std::uint64_t>(s));
    direct += std::norm(ch.direct[0]);
    reflected += std::norm(ch.cent_irs_to_ap[0]);
  }
  EXPECT_NEAR(direct / n / pl.direct[0], 1.0, 0.02);
  EXPECT_NEAR(reflected / n / pl.central_irs_to_ap, 1.0, 0.02);
}

TEST(Sampling, ZeroGammaGivesZeroChannels) {
  auto g = GeometryConfig::preset(100.0, 100.0);
  g.gamma0 = 0.0;
  const auto ch = sample_rayleigh_realization(g, {4, 2, 2}, 1);
  EXPECT_EQ(ch.direct[0], Complex{});
  for (const auto& v : ch.cent_irs_to_ap) EXPECT_EQ(v, Complex{});
  for (const auto& v : ch.dist_user_to_irs[1]) EXPECT_EQ(v, Complex{});
}

TEST(Sampling, InvalidSizesThrow) {
  const auto g = GeometryConfig::preset(100.0, 100.0);
  EXPECT_THROW(sample_rayleigh_realization(g, {4, 1, 1}, 1), ConfigError);
  EXPECT_THROW(sample_rayleigh_realization(g, {4, 0, 4}, 1), ConfigError);
  EXPECT_THROW(sample_rayleigh_realization(g, {-1, 0, 0}, 1), ConfigError);
}

TEST(Twin, MappingExample) {
  const Complex a{1, 0}, b{2, 0}, c{3, 0}, d{4, 0}, e{5, 0}, f{6, 0};
  const std::vector<Complex> gc{a, b}, h1{c, d}, h2{e, f};
  const auto links = build_twin_channels(h1, h2, gc, 1, 1);
  EXPECT_EQ(links.user_to_irs[0], std::vector<Complex>{a});
  EXPECT_EQ(links.user_to_irs[1], std::vector<Complex>{b});
  EXPECT_EQ(links.irs_to_ap[0], std::vector<Complex>{c});
  EXPECT_EQ(links.irs_to_ap[1], std::vector<Complex>{f});
}

TEST(Twin, ZeroInZeroOut) {
  const std::vector<Complex> z(5);
  const auto links = build_twin_channels(z, z, z, 2, 3);
  for (int k = 0; k < 2; ++k) {
    for (const auto& v : links.user_to_irs[k]) EXPECT_EQ(v, Complex{});
    for (const auto& v : links.irs_to_ap[k]) EXPECT_EQ(v, Complex{});
  }
}

TEST(Twin, ReassemblyRecoversIrsToAp) {
  const auto ch = fixture::draw(9, 4);
  std::vector<Complex> rebuilt = ch.dist_user_to_irs[0];
  rebuilt.insert(rebuilt.end(), ch.dist_user_to_irs[1].begin(), ch.dist_user_to_irs[1].end());
  EXPECT_EQ(rebuilt, ch.cent_irs_to_ap);
}

TEST(Twin, LengthMismatchThrows) {
  const std::vector<Complex> three(3), two(2);
  EXPECT_THROW(build_twin_channels(three, three, three, 1, 1), ConfigError);
  EXPECT_THROW(build_twin_channels(two, three, three, 1, 2), ConfigError);
}

namespace {

ChannelRealization single_element(Complex direct, Complex g, Complex h) {
  ChannelRealization ch;
  ch.sizes = {2, 1, 1};
  ch.direct = {direct, direct};
  ch.cent_irs_to_ap = {g, Complex{}};
  ch.cent_user_to_irs = {ComplexVector{h, Complex{}}, ComplexVector{h, Complex{}}};
  ch.dist_irs_to_ap = {ComplexVector{g}, ComplexVector{g}};
  ch.dist_user_to_irs = {ComplexVector{h}, ComplexVector{h}};
  return ch;
}

}  // namespace

TEST(EffectiveChannel, DirectOnly) {
  const auto ch = single_element(Complex{1, 0}, Complex{}, Complex{});
  EXPECT_EQ(effective_channel_distributed(ch, DistributedPhases{{0.3}, {1.2}}, 0), Complex(1, 0));
}

TEST(EffectiveChannel, PhaseCancellation) {
  const auto ch = single_element(Complex{}, std::polar(1.0, pi / 3), Complex{0.5, 0});
  const auto v = effective_channel_distributed(ch, DistributedPhases{{-pi / 3}, {0.0}}, 0);
  EXPECT_NEAR(v.real(), 0.5, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(EffectiveChannel, DistributedMatchesSummation) {
  const auto ch = fixture::draw(8, 17);
  SplitMix64 rng(1);
  DistributedPhases ph;
  for (int i = 0; i < 4; ++i) ph.first.push_back(rng.angle());
  for (int i = 0; i < 4; ++i) ph.second.push_back(rng.angle());
  EXPECT_NEAR(std::abs(effective_channel_distributed(ch, ph, 0) - oracle::distributed_channel(ch, ph.first, 0)), 0.0,
              1e-12 * std::abs(ch.direct[0]) + 1e-20);
  EXPECT_NEAR(std::abs(effective_channel_distributed(ch, ph, 1) - oracle::distributed_channel(ch, ph.second, 1)),
              0.0, 1e-12 * std::abs(ch.direct[1]) + 1e-20);
}

TEST(EffectiveChannel, CentralizedZeroChannels) {
  ChannelRealization ch;
  ch.sizes = {2, 1, 1};
  ch.cent_irs_to_ap.assign(2, {});
  ch.cent_user_to_irs = {ComplexVector(2), ComplexVector(2)};
  EXPECT_EQ(effective_channel_centralized(ch, CentralizedPhases{{0.1, 0.2}}, 0), Complex{});
}

TEST(EffectiveChannel, AlignedReachesBound) {
  const auto ch = fixture::draw(6, 5);
  for (int k = 0; k < 2; ++k) {
    const auto ph = align_phases_to_user(ch, k);
    const double bound = gain_upper_bounds(ch, Deployment::centralized).ub[k];
    EXPECT_NEAR(std::abs(effective_channel_centralized(ch, ph, k)), bound, 1e-12 * bound);
  }
}

TEST(EffectiveChannel, CentralizedMatchesSummation) {
  const auto ch = fixture::draw(6, 8);
  SplitMix64 rng(2);
  std::vector<double> theta(6);
  for (auto& t : theta) t = rng.angle();
  for (int k = 0; k < 2; ++k) {
    const auto got = effective_channel_centralized(ch, CentralizedPhases{theta}, k);
    const auto want = oracle::centralized_channel(ch, theta, k);
    EXPECT_LE(std::abs(got - want), 1e-12 * std::abs(want));
  }
}

TEST(EffectiveChannel, NonUnitModulusRejected) {
  const auto ch = fixture::draw(2, 1);
  const std::vector<Complex> bad{Complex(1.0, 0.0), Complex(0.5, 0.0)};
  EXPECT_THROW(effective_channel_centralized(ch, bad, 0), ValidationError);
  const std::vector<Complex> ok{std::polar(1.0, 0.4), std::polar(1.0 + 5e-10, 2.0)};
  EXPECT_NO_THROW(effective_channel_centralized(ch, ok, 0));
}

TEST(EffectiveChannel, TriangleInequalityBound) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto ch = fixture::draw(10, s);
    SplitMix64 rng(s);
    std::vector<double> theta(10);
    for (auto& t : theta) t = rng.angle();
    const auto b = gain_upper_bounds(ch, Deployment::centralized);
    for (int k = 0; k < 2; ++k) {
      EXPECT_LE(std::abs(effective_channel_centralized(ch, CentralizedPhases{theta}, k)), b.ub[k] * (1 + 1e-12));
    }
  }
}

TEST(Serialize, ChannelRoundTrip) {
  const auto ch = fixture::draw(6, 31);
  const auto text = channel_to_json(ch, 31, GeometryConfig::preset(500.0, 500.0));
  const auto back = channel_from_json(text);
  EXPECT_EQ(back.direct, ch.direct);
  EXPECT_EQ(back.cent_irs_to_ap, ch.cent_irs_to_ap);
  EXPECT_EQ(back.cent_user_to_irs[0], ch.cent_user_to_irs[0]);
  EXPECT_EQ(back.dist_irs_to_ap[1], ch.dist_irs_to_ap[1]);
  EXPECT_EQ(back.sizes.first, 3);
}

TEST(Serialize, MalformedChannelThrows) {
  EXPECT_THROW(channel_from_json("{"), ConfigError);
  EXPECT_THROW(channel_from_json("{\"sizes\": 3}"), ConfigError);
}

TEST(PowerConfig, Validation) {
  EXPECT_THROW(PowerConfig::uplink(1.0, -1.0).validate(), ConfigError);
  EXPECT_THROW(PowerConfig::uplink(1.0, 1.0, 0.0).validate(), ConfigError);
  EXPECT_DOUBLE_EQ(PowerConfig::uplink(4.0, 2.0, 2.0).snr_scale(0), 2.0);
  EXPECT_DOUBLE_EQ(db_to_linear(30.0), 1000.0);
}
