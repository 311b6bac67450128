#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "irs/centralized.hpp"
#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

/// Optimal downlink profile powers for fixed effective channels, indexed by decoding
/// position: [0] is the first-decoded user.
struct P6PowerResult {
  double beta = 1.0;
  double sum_rate = 0.0;
  std::array<double, 2> power{};
};

/// Largest beta with p_first = (beta^{1/(1-a)} - beta) sigma^2 / |h_first|^2,
/// p_second = (beta - 1) sigma^2 / |h_second|^2 and p_first + p_second <= P.
/// Gains are amplitudes |h~|. Requires alpha_first < 1.
P6PowerResult solve_p6_power_subproblem(double gain_first, double gain_second, double total_power,
                                        double noise, double alpha_first);

/// Uplink powers (alpha_P P, (1 - alpha_P) P) for each point of the L_P grid.
std::vector<PowerConfig> duality_power_splits(const PowerConfig& downlink, int points);

RatePolygon bc_capacity_region_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                           const SolverSettings& settings);
RatePolygon bc_tdma_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings);
RatePolygon bc_fdma_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings);

/// Downlink profile points; `runs[o].state.beta_history` traces each AO run.
std::vector<ProfilePoint> bc_profile_points(const ChannelRealization& ch, const PowerConfig& downlink,
                                            const SolverSettings& settings,
                                            std::span<const std::vector<double>> extra_inits = {});

/// One downlink profile run for a profile and decoding order.
AOResult bc_ao_sum_rate(const ChannelRealization& ch, const PowerConfig& downlink,
                        const RateProfileProblem& profile, const SolverSettings& settings,
                        std::uint64_t seed, std::span<const std::vector<double>> extra_inits = {});

RatePolygon bc_inner_bound_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                       const SolverSettings& settings,
                                       std::span<const std::vector<double>> extra_inits = {});

/// Union over the power-split grid of MAC outer-bound pentagons, one SDR
/// solve per split.
RatePolygon bc_outer_bound_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                       const SolverSettings& settings);

RatePolygon bc_tdma_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings);

/// Extended FDMA profile: cycles (r, p), (r, rho), then the element sweep.
FdmaProfileResult bc_fdma_profile(const ChannelRealization& ch, const PowerConfig& downlink,
                                  double alpha1, const SolverSettings& settings, std::uint64_t seed);

RatePolygon bc_fdma_inner_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                      const SolverSettings& settings);

}  // namespace irs
