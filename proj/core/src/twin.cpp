#include "irs/twin.hpp"

#include <cmath>
#include <numbers>

#include "irs/distributed.hpp"
#include "irs/errors.hpp"

namespace irs {

double alignment_rotation(Complex a1, Complex b1, Complex a2, Complex b2) {
  const double c1 = wrap_angle(phase_of(b1) - phase_of(a1));
  const double c2 = wrap_angle(phase_of(b2) - phase_of(a2));
  const double half_pi = std::numbers::pi / 2;
  const double theta =
      std::abs(c1 - c2) >= std::numbers::pi ? half_pi - std::min(c1, c2) : half_pi - std::max(c1, c2);
  return wrap_angle(theta);
}

namespace {

void require_twin(const ChannelRealization& ch) {
  if (!ch.has_distributed() || !ch.has_centralized()) {
    throw DomainError("twin construction needs both deployments populated");
  }
}

CentralizedPhases side_by_side(const DistributedPhases& d, double theta1, double theta2) {
  CentralizedPhases out;
  for (double p : d.first) out.angles.push_back(wrap_angle(p + theta1));
  for (double p : d.second) out.angles.push_back(wrap_angle(p + theta2));
  return out;
}

}  // namespace

TwinLift twin_lift_construction(const ChannelRealization& ch) {
  require_twin(ch);
  if (ch.direct[0] != Complex{} || ch.direct[1] != Complex{}) {
    throw DomainError("twin lift is only established for zero direct links");
  }
  const auto dist = optimal_phases_distributed(ch);
  const auto bounds = gain_upper_bounds(ch, Deployment::distributed);
  const int first = ch.sizes.first;
  const int total = ch.sizes.total;

  TwinLift out;
  out.a = bounds.ub;
  // User 1 through the second sub-surface; user 2 through the first,
  // conjugated so both cross terms rotate by +theta.
  for (int m = first; m < total; ++m) {
    out.f[0] += ch.cent_irs_to_ap[m] * ch.cent_user_to_irs[0][m] * std::polar(1.0, dist.second[m - first]);
  }
  for (int m = 0; m < first; ++m) {
    out.f[1] += std::conj(ch.cent_irs_to_ap[m] * ch.cent_user_to_irs[1][m] * std::polar(1.0, dist.first[m]));
  }
  for (int k = 0; k < 2; ++k) out.c[k] = wrap_angle(phase_of(out.f[k]));
  out.theta1 = 0.0;
  out.theta2 = alignment_rotation(out.a[0], out.f[0], out.a[1], out.f[1]);
  out.phases = side_by_side(dist, out.theta1, out.theta2);
  return out;
}

CentralizedPhases heuristic_twin_phases(const ChannelRealization& ch) {
  require_twin(ch);
  return side_by_side(optimal_phases_distributed(ch), 0.0, 0.0);
}

PentagonRegion heuristic_twin_region(const ChannelRealization& ch, const PowerConfig& powers) {
  powers.validate();
  const auto phases = heuristic_twin_phases(ch);
  const double g1 = std::norm(effective_channel_centralized(ch, phases, 0));
  const double g2 = std::norm(effective_channel_centralized(ch, phases, 1));
  return mac_pentagon(powers.snr_scale(0) * g1, powers.snr_scale(1) * g2);
}

}  // namespace irs
