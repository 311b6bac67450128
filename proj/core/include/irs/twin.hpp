#pragma once

#include <array>

#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

/// theta from the two-user phase alignment rule: with c_k = arg(b_k) - arg(a_k)
/// in [0, 2*pi), theta = pi/2 - min(c1, c2) if |c1 - c2| >= pi, else
/// pi/2 - max(c1, c2). Then |a_k + b_k e^{j theta}| >= |a_k| for k = 1, 2.
double alignment_rotation(Complex a1, Complex b1, Complex a2, Complex b2);

/// Centralized phases built from the distributed optimum, the second
/// sub-surface rotated by theta relative to the first.
struct TwinLift {
  CentralizedPhases phases;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::array<double, 2> a{};      // h~_{k,ub}^d
  std::array<Complex, 2> f{};     // cross-surface terms f~_k
  std::array<double, 2> c{};      // arg f~_k in [0, 2*pi)
};

/// Requires twin channels with h_bar_1 = h_bar_2 = 0 (DomainError otherwise).
/// Both centralized gains then reach at least the distributed bounds.
TwinLift twin_lift_construction(const ChannelRealization& ch);

/// theta1 = theta2 = 0: the distributed optimal phases laid side by side.
CentralizedPhases heuristic_twin_phases(const ChannelRealization& ch);

/// MAC pentagon achieved by the heuristic phases.
PentagonRegion heuristic_twin_region(const ChannelRealization& ch, const PowerConfig& powers);

}  // namespace irs
