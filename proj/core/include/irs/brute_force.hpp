#pragma once

#include <array>
#include <vector>

#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

/// Exhaustive phase-grid reference for small centralized surfaces.
struct BruteForceResult {
  RatePolygon capacity;   // hull of all grid pentagons
  RatePolygon fdma;       // hull of all grid FDMA curves
  /// Pareto-optimal received SNR pairs over the grid.
  std::vector<std::array<double, 2>> frontier;
};

inline constexpr int kBruteForceMaxElements = 3;

/// Enumerates L_0^M phase vectors with angles 2*pi*i/L_0. Throws ConfigError
/// when M > 3 or L_0 < 1.
BruteForceResult brute_force_regions(const ChannelRealization& ch, const PowerConfig& powers,
                                     int oracle_grid, int fdma_samples = 512);

}  // namespace irs
