#pragma once

#include <array>

#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

enum class Deployment { distributed, centralized };

/// Per-user passive beamforming bounds |h_bar_k| + sum_m |g_m h_km|, linear
/// amplitude.
struct GainBounds {
  std::array<double, 2> ub{};
  Deployment deployment = Deployment::distributed;
};

/// log2(1 + snr).
double shannon_rate(double snr);

/// rho * log2(1 + snr / rho), continuous at rho = 0.
double fdma_rate(double rho, double snr);

/// Pentagon for received SNRs s1 = P_1|h_1|^2/sigma^2 and s2.
PentagonRegion mac_pentagon(double snr1, double snr2);

/// Triangle (0,0), (r1,0), (0,r2).
RatePolygon tdma_triangle(double r1, double r2);

/// Hull of `samples` FDMA boundary points for fixed SNRs, rho uniform on [0,1].
RatePolygon fdma_curve_region(double snr1, double snr2, int samples);

/// phi_km = arg(h_bar_k) - arg(g_km h_km), wrapped to [0, 2*pi).
DistributedPhases optimal_phases_distributed(const ChannelRealization& ch);

GainBounds gain_upper_bounds(const ChannelRealization& ch, Deployment deployment);

PentagonRegion capacity_region_distributed(const ChannelRealization& ch, const PowerConfig& powers);
RatePolygon tdma_region_distributed(const ChannelRealization& ch, const PowerConfig& powers);
RatePolygon fdma_region_distributed(const ChannelRealization& ch, const PowerConfig& powers,
                                    int samples = 512);

}  // namespace irs
