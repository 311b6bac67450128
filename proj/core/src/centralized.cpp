#include "irs/centralized.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ao_engine.hpp"
#include "irs/distributed.hpp"
#include "irs/element_solver.hpp"
#include "irs/errors.hpp"
#include "irs/rng.hpp"

namespace irs {

void RateProfileProblem::validate() const {
  if (!(alpha1 >= 0.0 && alpha1 <= 1.0)) {
    throw ConfigError(fmt::format("rate share alpha1 must lie in [0, 1], got {}", alpha1));
  }
}

void SolverSettings::validate() const {
  if (rate_grid < 2) throw ConfigError("L (rate_grid) must be >= 2");
  if (power_grid < 2) throw ConfigError("L_P (power_grid) must be >= 2");
  if (oracle_grid < 1) throw ConfigError("L_0 (oracle_grid) must be >= 1");
  if (random_inits < 1) throw ConfigError("Q (random_inits) must be >= 1");
  if (ao_starts < 0) throw ConfigError("ao_starts must be >= 0");
  if (max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");
  if (!(convergence_tol > 0.0)) throw ConfigError("convergence_tol must be > 0");
  if (fdma_samples < 2) throw ConfigError("fdma_samples must be >= 2");
  if (!(sdr_tol > 0.0)) throw ConfigError("sdr_tol must be > 0");
}

std::vector<double> alpha_grid(int points) {
  if (points < 2) throw ConfigError(fmt::format("profile grid needs >= 2 points, got {}", points));
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
  return grid;
}

namespace {

/// Uplink rate profile with fixed powers: SNR demands 2^r - 2^{(1-a) r} and 2^{(1-a) r} - 1.
class ProfileObjective final : public detail::Objective {
 public:
  ProfileObjective(int first, double alpha, std::array<double, 2> scale)
      : first_(first), alpha_(alpha), scale_(scale) {}

  std::array<double, 2> scales() const override { return scale_; }
  double value(std::array<double, 2> g) const override {
    return profile_rate(scale_[first_] * g[first_], scale_[1 - first_] * g[1 - first_], alpha_);
  }
  std::array<double, 2> demand(double r) const override {
    const auto d = profile_demand(r, alpha_);
    std::array<double, 2> out;
    out[first_] = d[0];
    out[1 - first_] = d[1];
    return out;
  }
  double refresh(std::array<double, 2> g) override { return value(g); }

 private:
  int first_;
  double alpha_;
  std::array<double, 2> scale_;
};

}  // namespace

AOResult ao_sum_rate(const ChannelRealization& ch, const PowerConfig& powers,
                     const RateProfileProblem& profile, const SolverSettings& settings,
                     std::uint64_t seed, std::span<const std::vector<double>> extra_inits) {
  profile.validate();
  powers.validate();
  const auto model = detail::CascadeModel::from(ch);
  const int first = profile.first_user();
  const double alpha = profile.alpha_first();
  AOResult out;

  if (alpha >= 1.0) {
    const double ub = model.gain_bound(first);
    out.sum_rate = shannon_rate(powers.snr_scale(first) * ub * ub);
    out.state.angles = model.aligned(first);
    return out;
  }

  ProfileObjective objective(first, alpha, {powers.snr_scale(0), powers.snr_scale(1)});
  std::vector<std::vector<double>> inits{model.aligned(0), model.aligned(1)};
  inits.insert(inits.end(), extra_inits.begin(), extra_inits.end());
  auto run = detail::run_alternating(model, objective, inits, settings, seed);

  const double share = 1.0 - alpha;
  out.sum_rate = run.value;
  out.state.angles = std::move(run.angles);
  out.state.iterations = run.sweeps;
  out.state.beta = std::exp2(share * run.value);
  for (double r : run.history) out.state.beta_history.push_back(std::exp2(share * r));
  return out;
}

std::vector<ProfilePoint> rate_profile_points(const ChannelRealization& ch, const PowerConfig& powers,
                                              const SolverSettings& settings,
                                              std::span<const std::vector<double>> extra_inits) {
  settings.validate();
  const auto grid = alpha_grid(settings.rate_grid);
  std::vector<ProfilePoint> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ProfilePoint p;
    p.alpha1 = grid[i];
    for (int o = 0; o < 2; ++o) {
      const RateProfileProblem problem{grid[i], o == 0 ? DecodingOrder::I : DecodingOrder::II};
      p.runs[o] = ao_sum_rate(ch, powers, problem, settings, derive_seed(settings.seed, 2 * i + o),
                              extra_inits);
    }
    const double r = std::max(p.runs[0].sum_rate, p.runs[1].sum_rate);
    p.rates = {p.alpha1 * r, (1.0 - p.alpha1) * r};
    points.push_back(std::move(p));
  }
  return points;
}

RatePolygon profile_hull(std::span<const ProfilePoint> points) {
  std::vector<RatePair> pts;
  pts.reserve(points.size() + 1);
  pts.push_back({});
  for (const auto& p : points) pts.push_back(p.rates);
  return convex_hull(pts);
}

RatePolygon inner_bound_region(const ChannelRealization& ch, const PowerConfig& powers,
                               const SolverSettings& settings,
                               std::span<const std::vector<double>> extra_inits) {
  const auto points = rate_profile_points(ch, powers, settings, extra_inits);
  return profile_hull(points);
}

CentralizedPhases align_phases_to_user(const ChannelRealization& ch, int user) {
  if (user != 0 && user != 1) throw ConfigError(fmt::format("user index must be 0 or 1, got {}", user));
  return {detail::CascadeModel::from(ch).aligned(user)};
}

PentagonRegion outer_bound_region(const ChannelRealization& ch, const PowerConfig& powers,
                                  double sdr_cap, bool* repaired) {
  powers.validate();
  const auto b = gain_upper_bounds(ch, Deployment::centralized);
  PentagonRegion p{shannon_rate(powers.snr_scale(0) * b.ub[0] * b.ub[0]),
                   shannon_rate(powers.snr_scale(1) * b.ub[1] * b.ub[1]), sdr_cap};
  const double floor = std::max(p.r1_cap, p.r2_cap);
  if (repaired) *repaired = p.sum_cap < floor;
  p.sum_cap = std::clamp(p.sum_cap, floor, p.r1_cap + p.r2_cap);
  return p;
}

RatePolygon tdma_region_centralized(const ChannelRealization& ch, const PowerConfig& powers) {
  powers.validate();
  const auto b = gain_upper_bounds(ch, Deployment::centralized);
  return tdma_triangle(shannon_rate(powers.snr_scale(0) * b.ub[0] * b.ub[0]),
                       shannon_rate(powers.snr_scale(1) * b.ub[1] * b.ub[1]));
}

}  // namespace irs
