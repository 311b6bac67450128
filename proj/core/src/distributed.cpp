#include "irs/distributed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "irs/errors.hpp"

namespace irs {

double shannon_rate(double snr) { return std::log1p(snr) / std::numbers::ln2; }

double fdma_rate(double rho, double snr) {
  if (rho <= 0.0 || snr <= 0.0) return 0.0;
  return rho * std::log1p(snr / rho) / std::numbers::ln2;
}

PentagonRegion mac_pentagon(double snr1, double snr2) {
  PentagonRegion p{shannon_rate(snr1), shannon_rate(snr2), shannon_rate(snr1 + snr2)};
  // Rounding can push the sum cap a hair outside [max, r1 + r2].
  p.sum_cap = std::clamp(p.sum_cap, std::max(p.r1_cap, p.r2_cap), p.r1_cap + p.r2_cap);
  return p;
}

RatePolygon tdma_triangle(double r1, double r2) {
  const RatePair pts[] = {{r1, 0.0}, {0.0, r2}};
  return convex_hull(pts);
}

RatePolygon fdma_curve_region(double snr1, double snr2, int samples) {
  if (samples < 2) throw ConfigError(fmt::format("FDMA needs at least 2 samples, got {}", samples));
  std::vector<RatePair> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double rho = static_cast<double>(i) / (samples - 1);
    pts.push_back({fdma_rate(rho, snr1), fdma_rate(1.0 - rho, snr2)});
  }
  // Endpoints exactly equal the single-user points.
  pts.front() = {0.0, shannon_rate(snr2)};
  pts.back() = {shannon_rate(snr1), 0.0};
  return convex_hull(pts);
}

DistributedPhases optimal_phases_distributed(const ChannelRealization& ch) {
  DistributedPhases out;
  for (int k = 0; k < 2; ++k) {
    auto& angles = k == 0 ? out.first : out.second;
    const auto& h = ch.dist_user_to_irs[k];
    const auto& g = ch.dist_irs_to_ap[k];
    const double ref = phase_of(ch.direct[k]);
    angles.resize(h.size());
    for (std::size_t m = 0; m < h.size(); ++m) angles[m] = wrap_angle(ref - phase_of(g[m] * h[m]));
  }
  return out;
}

GainBounds gain_upper_bounds(const ChannelRealization& ch, Deployment deployment) {
  GainBounds b;
  b.deployment = deployment;
  for (int k = 0; k < 2; ++k) {
    double sum = std::abs(ch.direct[k]);
    if (deployment == Deployment::distributed) {
      const auto& h = ch.dist_user_to_irs[k];
      const auto& g = ch.dist_irs_to_ap[k];
      for (std::size_t m = 0; m < h.size(); ++m) sum += std::abs(g[m]) * std::abs(h[m]);
    } else {
      const auto& h = ch.cent_user_to_irs[k];
      for (std::size_t m = 0; m < h.size(); ++m) sum += std::abs(ch.cent_irs_to_ap[m]) * std::abs(h[m]);
    }
    b.ub[k] = sum;
  }
  return b;
}

namespace {

std::array<double, 2> distributed_snrs(const ChannelRealization& ch, const PowerConfig& powers) {
  powers.validate();
  const GainBounds b = gain_upper_bounds(ch, Deployment::distributed);
  return {powers.snr_scale(0) * b.ub[0] * b.ub[0], powers.snr_scale(1) * b.ub[1] * b.ub[1]};
}

}  // namespace

PentagonRegion capacity_region_distributed(const ChannelRealization& ch, const PowerConfig& powers) {
  const auto s = distributed_snrs(ch, powers);
  return mac_pentagon(s[0], s[1]);
}

RatePolygon tdma_region_distributed(const ChannelRealization& ch, const PowerConfig& powers) {
  const auto s = distributed_snrs(ch, powers);
  return tdma_triangle(shannon_rate(s[0]), shannon_rate(s[1]));
}

RatePolygon fdma_region_distributed(const ChannelRealization& ch, const PowerConfig& powers,
                                    int samples) {
  const auto s = distributed_snrs(ch, powers);
  return fdma_curve_region(s[0], s[1], samples);
}

}  // namespace irs
