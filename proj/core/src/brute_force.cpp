#include "irs/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "irs/distributed.hpp"
#include "irs/errors.hpp"

namespace irs {

BruteForceResult brute_force_regions(const ChannelRealization& ch, const PowerConfig& powers,
                                     int oracle_grid, int fdma_samples) {
  powers.validate();
  const int m = ch.sizes.total;
  if (m > kBruteForceMaxElements) {
    throw ConfigError(fmt::format("brute force is limited to M <= {} (got M = {})",
                                  kBruteForceMaxElements, m));
  }
  if (oracle_grid < 1) throw ConfigError("L_0 must be >= 1");

  std::vector<Complex> unit(oracle_grid);
  for (int i = 0; i < oracle_grid; ++i) {
    unit[i] = std::polar(1.0, 2.0 * std::numbers::pi * i / oracle_grid);
  }
  std::array<ComplexVector, 2> cascade;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < m; ++i) cascade[k].push_back(ch.cent_irs_to_ap[i] * ch.cent_user_to_irs[k][i]);
  }

  std::vector<std::array<double, 2>> snrs;
  std::vector<int> index(m, 0);
  while (true) {
    std::array<Complex, 2> eff = ch.direct;
    for (int i = 0; i < m; ++i) {
      eff[0] += cascade[0][i] * unit[index[i]];
      eff[1] += cascade[1][i] * unit[index[i]];
    }
    snrs.push_back({powers.snr_scale(0) * std::norm(eff[0]), powers.snr_scale(1) * std::norm(eff[1])});
    int pos = 0;
    while (pos < m && ++index[pos] == oracle_grid) index[pos++] = 0;
    if (pos == m) break;
  }

  // Regions are monotone in both SNRs, so only the Pareto front matters.
  std::sort(snrs.begin(), snrs.end(), [](const auto& a, const auto& b) {
    return a[0] > b[0] || (a[0] == b[0] && a[1] > b[1]);
  });
  BruteForceResult out;
  double best_second = -1.0;
  for (const auto& s : snrs) {
    if (s[1] > best_second) {
      out.frontier.push_back(s);
      best_second = s[1];
    }
  }

  std::vector<RatePair> cap_pts;
  std::vector<RatePair> fdma_pts;
  for (const auto& s : out.frontier) {
    const auto pent = pentagon_vertices(mac_pentagon(s[0], s[1]));
    cap_pts.insert(cap_pts.end(), pent.vertices().begin(), pent.vertices().end());
    const auto curve = fdma_curve_region(s[0], s[1], fdma_samples);
    fdma_pts.insert(fdma_pts.end(), curve.vertices().begin(), curve.vertices().end());
  }
  out.capacity = convex_hull(cap_pts);
  out.fdma = convex_hull(fdma_pts);
  return out;
}

}  // namespace irs
