#include "irs/channel.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "irs/errors.hpp"
#include "irs/rng.hpp"

namespace irs {

ArraySizes ArraySizes::even_split(int total) {
  ArraySizes s{total, total / 2, total - total / 2};
  return s;
}

void ArraySizes::validate() const {
  if (total < 0 || first < 0 || second < 0) {
    throw ConfigError(fmt::format("negative element count (M={}, M1={}, M2={})", total, first, second));
  }
  if (total == 0) {
    if (first != 0 || second != 0) throw ConfigError("M = 0 requires M1 = M2 = 0");
    return;
  }
  if (first < 1 || second < 1 || first + second != total) {
    throw ConfigError(
        fmt::format("element split must satisfy M1 + M2 = M with M1, M2 >= 1 (M={}, M1={}, M2={})",
                    total, first, second));
  }
}

bool ChannelRealization::has_distributed() const {
  return sizes.first > 0 && sizes.second > 0;
}

bool ChannelRealization::has_centralized() const { return sizes.total > 0; }

void ChannelRealization::validate() const {
  sizes.validate();
  const auto expect = [](std::size_t got, int want, const char* what) {
    if (got != static_cast<std::size_t>(want)) {
      throw ConfigError(fmt::format("{} has length {}, expected {}", what, got, want));
    }
  };
  expect(cent_irs_to_ap.size(), sizes.total, "g^c");
  expect(cent_user_to_irs[0].size(), sizes.total, "h_1^c");
  expect(cent_user_to_irs[1].size(), sizes.total, "h_2^c");
  expect(dist_user_to_irs[0].size(), sizes.first, "h_1^d");
  expect(dist_irs_to_ap[0].size(), sizes.first, "g_1^d");
  expect(dist_user_to_irs[1].size(), sizes.second, "h_2^d");
  expect(dist_irs_to_ap[1].size(), sizes.second, "g_2^d");
}

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

GeometryConfig GeometryConfig::preset(double d1, double d2) {
  GeometryConfig g;
  g.ap = {0.0, 0.0, 10.0};
  g.users = {Position{d1, 0.0, 1.0}, Position{-d2, 0.0, 1.0}};
  g.central_irs = {0.0, 0.0, 9.0};
  g.distributed_irs = {Position{d1, 0.0, 2.0}, Position{-d2, 0.0, 2.0}};
  return g;
}

double GeometryConfig::horizontal_distance(int user) const {
  return std::hypot(users[user].x - ap.x, users[user].y - ap.y);
}

void GeometryConfig::validate() const {
  if (!(gamma0 >= 0.0) || !std::isfinite(gamma0)) throw ConfigError("gamma0 must be finite and >= 0");
  if (!(exponent_direct > 0.0) || !(exponent_reflected > 0.0)) {
    throw ConfigError("path-loss exponents must be positive");
  }
  for (int k = 0; k < 2; ++k) {
    if (!(distance(users[k], ap) > 0.0) || !(distance(users[k], central_irs) > 0.0)) {
      throw ConfigError(fmt::format("user {} coincides with the AP or the central IRS", k + 1));
    }
  }
  if (!(distance(central_irs, ap) > 0.0)) throw ConfigError("central IRS coincides with the AP");
}

PowerConfig PowerConfig::uplink(double p1, double p2, double noise) {
  PowerConfig p;
  p.user1 = p1;
  p.user2 = p2;
  p.noise = noise;
  return p;
}

PowerConfig PowerConfig::downlink(double total, double noise) {
  PowerConfig p;
  p.total = total;
  p.noise = noise;
  return p;
}

void PowerConfig::validate() const {
  if (!(noise > 0.0) || !std::isfinite(noise)) throw ConfigError("noise power must be positive");
  for (double v : {user1, user2, total}) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("powers must be finite and >= 0");
  }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double path_loss(double d, double exponent, double gamma0) {
  if (!(d > 0.0)) throw DomainError(fmt::format("path_loss: distance must be positive, got {}", d));
  return gamma0 * std::pow(1.0 / d, exponent);
}

LinkPathLoss link_path_loss(const GeometryConfig& g) {
  LinkPathLoss pl;
  for (int k = 0; k < 2; ++k) {
    pl.direct[k] = path_loss(distance(g.users[k], g.ap), g.exponent_direct, g.gamma0);
    pl.user_to_central_irs[k] =
        path_loss(distance(g.users[k], g.central_irs), g.exponent_reflected, g.gamma0);
  }
  pl.central_irs_to_ap = path_loss(distance(g.central_irs, g.ap), g.exponent_reflected, g.gamma0);
  return pl;
}

ChannelRealization sample_rayleigh_realization(const GeometryConfig& geometry, const ArraySizes& sizes,
                                               std::uint64_t seed) {
  geometry.validate();
  sizes.validate();
  const LinkPathLoss pl = link_path_loss(geometry);
  SplitMix64 rng(seed);

  ChannelRealization ch;
  ch.sizes = sizes;
  for (int k = 0; k < 2; ++k) ch.direct[k] = rng.complex_gaussian(pl.direct[k]);
  for (int k = 0; k < 2; ++k) {
    ch.cent_user_to_irs[k].resize(sizes.total);
    for (auto& h : ch.cent_user_to_irs[k]) h = rng.complex_gaussian(pl.user_to_central_irs[k]);
  }
  ch.cent_irs_to_ap.resize(sizes.total);
  for (auto& g : ch.cent_irs_to_ap) g = rng.complex_gaussian(pl.central_irs_to_ap);

  if (sizes.total > 0) {
    DistributedLinks d = build_twin_channels(ch.cent_user_to_irs[0], ch.cent_user_to_irs[1],
                                             ch.cent_irs_to_ap, sizes.first, sizes.second);
    ch.dist_user_to_irs = std::move(d.user_to_irs);
    ch.dist_irs_to_ap = std::move(d.irs_to_ap);
  }
  return ch;
}

DistributedLinks build_twin_channels(std::span<const Complex> h1c, std::span<const Complex> h2c,
                                     std::span<const Complex> gc, int first, int second) {
  const std::size_t m = gc.size();
  if (first < 0 || second < 0 || static_cast<std::size_t>(first + second) != m || h1c.size() != m ||
      h2c.size() != m) {
    throw ConfigError(fmt::format(
        "twin channels need |h_1^c| = |h_2^c| = |g^c| = M1 + M2 (got {}, {}, {} vs {} + {})",
        h1c.size(), h2c.size(), m, first, second));
  }
  const auto f = static_cast<std::size_t>(first);
  DistributedLinks d;
  d.user_to_irs[0].assign(gc.begin(), gc.begin() + first);
  d.user_to_irs[1].assign(gc.begin() + first, gc.end());
  d.irs_to_ap[0].assign(h1c.begin(), h1c.begin() + first);
  d.irs_to_ap[1].assign(h2c.begin() + static_cast<std::ptrdiff_t>(f), h2c.end());
  return d;
}

ChannelRealization with_twin_split(const ChannelRealization& ch, int first, int second) {
  ChannelRealization out = ch;
  out.sizes = {ch.sizes.total, first, second};
  out.sizes.validate();
  DistributedLinks d = build_twin_channels(ch.cent_user_to_irs[0], ch.cent_user_to_irs[1],
                                           ch.cent_irs_to_ap, first, second);
  out.dist_user_to_irs = std::move(d.user_to_irs);
  out.dist_irs_to_ap = std::move(d.irs_to_ap);
  return out;
}

ChannelRealization with_zero_direct(const ChannelRealization& ch) {
  ChannelRealization out = ch;
  out.direct = {Complex{}, Complex{}};
  return out;
}

ChannelRealization without_irs(const ChannelRealization& ch) {
  ChannelRealization out;
  out.direct = ch.direct;
  out.sizes = {0, 0, 0};
  return out;
}

ChannelRealization embed_distributed_as_centralized(const ChannelRealization& ch) {
  const int m1 = static_cast<int>(ch.dist_user_to_irs[0].size());
  const int m2 = static_cast<int>(ch.dist_user_to_irs[1].size());
  ChannelRealization out;
  out.direct = ch.direct;
  out.sizes = {m1 + m2, m1, m2};
  out.cent_irs_to_ap.reserve(m1 + m2);
  for (const auto& g : ch.dist_irs_to_ap[0]) out.cent_irs_to_ap.push_back(g);
  for (const auto& g : ch.dist_irs_to_ap[1]) out.cent_irs_to_ap.push_back(g);
  out.cent_user_to_irs[0].assign(m1 + m2, Complex{});
  out.cent_user_to_irs[1].assign(m1 + m2, Complex{});
  for (int m = 0; m < m1; ++m) out.cent_user_to_irs[0][m] = ch.dist_user_to_irs[0][m];
  for (int m = 0; m < m2; ++m) out.cent_user_to_irs[1][m1 + m] = ch.dist_user_to_irs[1][m];
  out.dist_user_to_irs = ch.dist_user_to_irs;
  out.dist_irs_to_ap = ch.dist_irs_to_ap;
  return out;
}

double wrap_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

double phase_of(Complex z) { return z == Complex{} ? 0.0 : std::arg(z); }

namespace {

void check_user(int user) {
  if (user != 0 && user != 1) throw ConfigError(fmt::format("user index must be 0 or 1, got {}", user));
}

void check_unit_modulus(std::span<const Complex> coefficients) {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (std::abs(std::abs(coefficients[i]) - 1.0) > kUnitModulusTolerance) {
      throw ValidationError(fmt::format("reflection coefficient {} has modulus {:.17g}", i,
                                        std::abs(coefficients[i])));
    }
  }
}

}  // namespace

Complex effective_channel_distributed(const ChannelRealization& ch, const DistributedPhases& phases,
                                      int user) {
  check_user(user);
  const auto& angles = user == 0 ? phases.first : phases.second;
  const auto& h = ch.dist_user_to_irs[user];
  const auto& g = ch.dist_irs_to_ap[user];
  if (angles.size() != h.size()) {
    throw ConfigError(fmt::format("IRS {} expects {} phases, got {}", user + 1, h.size(), angles.size()));
  }
  Complex sum = ch.direct[user];
  for (std::size_t m = 0; m < h.size(); ++m) sum += g[m] * std::polar(1.0, angles[m]) * h[m];
  return sum;
}

Complex effective_channel_centralized(const ChannelRealization& ch, const CentralizedPhases& phases,
                                      int user) {
  check_user(user);
  const auto& h = ch.cent_user_to_irs[user];
  if (phases.angles.size() != h.size()) {
    throw ConfigError(fmt::format("centralized IRS expects {} phases, got {}", h.size(),
                                  phases.angles.size()));
  }
  Complex sum = ch.direct[user];
  for (std::size_t m = 0; m < h.size(); ++m) {
    sum += ch.cent_irs_to_ap[m] * std::polar(1.0, phases.angles[m]) * h[m];
  }
  return sum;
}

Complex effective_channel_centralized(const ChannelRealization& ch, std::span<const Complex> phi,
                                      int user) {
  check_user(user);
  check_unit_modulus(phi);
  const auto& h = ch.cent_user_to_irs[user];
  if (phi.size() != h.size()) throw ConfigError("coefficient count does not match M");
  Complex sum = ch.direct[user];
  for (std::size_t m = 0; m < h.size(); ++m) sum += ch.cent_irs_to_ap[m] * phi[m] * h[m];
  return sum;
}

Complex effective_channel_distributed(const ChannelRealization& ch, std::span<const Complex> phi,
                                      int user) {
  check_user(user);
  check_unit_modulus(phi);
  const auto& h = ch.dist_user_to_irs[user];
  const auto& g = ch.dist_irs_to_ap[user];
  if (phi.size() != h.size()) throw ConfigError("coefficient count does not match M_k");
  Complex sum = ch.direct[user];
  for (std::size_t m = 0; m < h.size(); ++m) sum += g[m] * phi[m] * h[m];
  return sum;
}

}  // namespace irs
