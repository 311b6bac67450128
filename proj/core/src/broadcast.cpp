#include "irs/broadcast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "ao_engine.hpp"
#include "irs/distributed.hpp"
#include "irs/element_solver.hpp"
#include "irs/errors.hpp"
#include "irs/rng.hpp"
#include "irs/sdr.hpp"

namespace irs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kBcStream = 0xBC;
constexpr std::uint64_t kBcFdmaStream = 0xBF;

/// Power needed to deliver SNR `demand` over a link with SNR-per-watt `h`.
double power_for(double demand, double h) {
  if (demand <= 0.0) return 0.0;
  return h > 0.0 ? demand / h : kInf;
}

void check_downlink(const PowerConfig& downlink) {
  downlink.validate();
}

/// Downlink rate profile: SIC with the sum-power budget shared by the users.
class BcProfileObjective final : public detail::Objective {
 public:
  BcProfileObjective(int first, double alpha, double total, double noise)
      : first_(first), alpha_(alpha), total_(total), noise_(noise), power_{total / 2, total / 2} {}

  std::array<double, 2> scales() const override { return {power_[0] / noise_, power_[1] / noise_}; }
  double value(std::array<double, 2> g) const override {
    const auto s = scales();
    return profile_rate(s[first_] * g[first_], s[1 - first_] * g[1 - first_], alpha_);
  }
  std::array<double, 2> demand(double r) const override {
    const auto d = profile_demand(r, alpha_);
    std::array<double, 2> out;
    out[first_] = d[0];
    out[1 - first_] = d[1];
    return out;
  }
  double refresh(std::array<double, 2> g) override {
    const auto res = solve_p6_power_subproblem(std::sqrt(g[first_]), std::sqrt(g[1 - first_]), total_,
                                               noise_, alpha_);
    power_[first_] = res.power[0];
    power_[1 - first_] = res.power[1];
    return value(g);
  }
  void reset() override { power_ = {total_ / 2, total_ / 2}; }
  std::array<double, 3> aux() const override { return {power_[0], power_[1], 0.0}; }
  void set_aux(std::array<double, 3> a) override { power_ = {a[0], a[1]}; }

 private:
  int first_;
  double alpha_;
  double total_;
  double noise_;
  std::array<double, 2> power_;
};

/// Extended FDMA with bandwidth split and power split.
class BcFdmaObjective final : public detail::Objective {
 public:
  BcFdmaObjective(double alpha1, double total, double noise)
      : alpha1_(alpha1), total_(total), noise_(noise) {
    reset();
  }

  std::array<double, 2> scales() const override { return {power_[0] / noise_, power_[1] / noise_}; }
  double value(std::array<double, 2> g) const override {
    const auto s = scales();
    return fdma_split_rate(s[0] * g[0], s[1] * g[1], alpha1_, rho_);
  }
  std::array<double, 2> demand(double r) const override { return fdma_demand(r, alpha1_, rho_); }
  double refresh(std::array<double, 2> g) override {
    const std::array<double, 2> h{g[0] / noise_, g[1] / noise_};
    // (r, p) with rho fixed: smallest powers meeting the demands, bisect on r.
    const auto need = [&](double r) {
      const auto d = fdma_demand(r, alpha1_, rho_);
      return std::array<double, 2>{power_for(d[0], h[0]), power_for(d[1], h[1])};
    };
    double lo = 0.0;
    double hi = fdma_split_rate(total_ * h[0], total_ * h[1], alpha1_, rho_);
    const auto fits = [&](double r) {
      const auto p = need(r);
      return p[0] + p[1] <= total_;
    };
    if (fits(hi)) {
      lo = hi;
    } else {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (fits(mid) ? lo : hi) = mid;
      }
    }
    const auto p = need(lo);
    const std::array<double, 2> saved = power_;
    const double before = value(g);
    power_ = p;
    if (value(g) < before) power_ = saved;
    // (r, rho) with powers fixed.
    const auto s = scales();
    const double keep_rho = rho_;
    const double prior = value(g);
    rho_ = fdma_best_split(s[0] * g[0], s[1] * g[1], alpha1_)[1];
    if (value(g) < prior) rho_ = keep_rho;
    return value(g);
  }
  void reset() override {
    rho_ = alpha1_;
    power_ = {total_ / 2, total_ / 2};
  }
  std::array<double, 3> aux() const override { return {rho_, power_[0], power_[1]}; }
  void set_aux(std::array<double, 3> a) override {
    rho_ = a[0];
    power_ = {a[1], a[2]};
  }

 private:
  double alpha1_;
  double total_;
  double noise_;
  double rho_ = 0.5;
  std::array<double, 2> power_{};
};

template <class RegionFn>
RatePolygon union_over_splits(const PowerConfig& downlink, const SolverSettings& settings, RegionFn fn) {
  check_downlink(downlink);
  settings.validate();
  std::vector<RatePolygon> regions;
  for (const auto& p : duality_power_splits(downlink, settings.power_grid)) regions.push_back(fn(p));
  return union_hull(regions);
}

}  // namespace

P6PowerResult solve_p6_power_subproblem(double gain_first, double gain_second, double total_power,
                                        double noise, double alpha_first) {
  if (!(alpha_first >= 0.0 && alpha_first < 1.0)) {
    throw DomainError(fmt::format("power subproblem needs alpha in [0, 1), got {}", alpha_first));
  }
  if (gain_first < 0.0 || gain_second < 0.0 || !(total_power >= 0.0) || !(noise > 0.0)) {
    throw DomainError("power subproblem needs gains >= 0, P >= 0, sigma^2 > 0");
  }
  const double h1 = gain_first * gain_first / noise;
  const double h2 = gain_second * gain_second / noise;
  const auto need = [&](double r) {
    const auto d = profile_demand(r, alpha_first);
    return std::array<double, 2>{power_for(d[0], h1), power_for(d[1], h2)};
  };
  const auto fits = [&](double r) {
    const auto p = need(r);
    return p[0] + p[1] <= total_power;
  };
  double lo = 0.0;
  double hi = shannon_rate(total_power * (h1 + h2));
  if (fits(hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (fits(mid) ? lo : hi) = mid;
    }
  }
  P6PowerResult out;
  out.sum_rate = lo;
  out.beta = std::exp2((1.0 - alpha_first) * lo);
  out.power = need(lo);
  return out;
}

std::vector<PowerConfig> duality_power_splits(const PowerConfig& downlink, int points) {
  std::vector<PowerConfig> out;
  for (double a : alpha_grid(points)) {
    out.push_back(PowerConfig::uplink(a * downlink.total, (1.0 - a) * downlink.total, downlink.noise));
  }
  return out;
}

RatePolygon bc_capacity_region_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                           const SolverSettings& settings) {
  return union_over_splits(downlink, settings, [&](const PowerConfig& p) {
    return pentagon_vertices(capacity_region_distributed(ch, p));
  });
}

RatePolygon bc_tdma_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings) {
  return union_over_splits(downlink, settings,
                           [&](const PowerConfig& p) { return tdma_region_distributed(ch, p); });
}

RatePolygon bc_fdma_distributed(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings) {
  return union_over_splits(downlink, settings, [&](const PowerConfig& p) {
    return fdma_region_distributed(ch, p, settings.fdma_samples);
  });
}

AOResult bc_ao_sum_rate(const ChannelRealization& ch, const PowerConfig& downlink,
                        const RateProfileProblem& profile, const SolverSettings& settings,
                        std::uint64_t seed, std::span<const std::vector<double>> extra_inits) {
  profile.validate();
  check_downlink(downlink);
  const auto model = detail::CascadeModel::from(ch);
  const int first = profile.first_user();
  const double alpha = profile.alpha_first();
  AOResult out;
  if (alpha >= 1.0) {
    const double ub = model.gain_bound(first);
    out.sum_rate = shannon_rate(downlink.total / downlink.noise * ub * ub);
    out.state.angles = model.aligned(first);
    return out;
  }
  BcProfileObjective objective(first, alpha, downlink.total, downlink.noise);
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

std::vector<ProfilePoint> bc_profile_points(const ChannelRealization& ch, const PowerConfig& downlink,
                                            const SolverSettings& settings,
                                            std::span<const std::vector<double>> extra_inits) {
  settings.validate();
  const auto grid = alpha_grid(settings.rate_grid);
  std::vector<ProfilePoint> points;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ProfilePoint p;
    p.alpha1 = grid[i];
    for (int o = 0; o < 2; ++o) {
      const RateProfileProblem problem{grid[i], o == 0 ? DecodingOrder::I : DecodingOrder::II};
      p.runs[o] = bc_ao_sum_rate(ch, downlink, problem, settings,
                                 derive_seed(settings.seed, (kBcStream << 32) + 2 * i + o), extra_inits);
    }
    const double r = std::max(p.runs[0].sum_rate, p.runs[1].sum_rate);
    p.rates = {p.alpha1 * r, (1.0 - p.alpha1) * r};
    points.push_back(std::move(p));
  }
  return points;
}

RatePolygon bc_inner_bound_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                       const SolverSettings& settings,
                                       std::span<const std::vector<double>> extra_inits) {
  const auto points = bc_profile_points(ch, downlink, settings, extra_inits);
  return profile_hull(points);
}

RatePolygon bc_outer_bound_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                       const SolverSettings& settings) {
  return union_over_splits(downlink, settings, [&](const PowerConfig& p) {
    const double cap = sum_rate_upper_bound(ch, p, settings.sdr_tol);
    return pentagon_vertices(outer_bound_region(ch, p, cap));
  });
}

RatePolygon bc_tdma_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                const SolverSettings& settings) {
  return union_over_splits(downlink, settings,
                           [&](const PowerConfig& p) { return tdma_region_centralized(ch, p); });
}

FdmaProfileResult bc_fdma_profile(const ChannelRealization& ch, const PowerConfig& downlink,
                                  double alpha1, const SolverSettings& settings, std::uint64_t seed) {
  check_downlink(downlink);
  const auto model = detail::CascadeModel::from(ch);
  FdmaProfileResult out;
  out.alpha1 = alpha1;
  if (alpha1 <= 0.0 || alpha1 >= 1.0) {
    const int user = alpha1 >= 1.0 ? 0 : 1;
    const double ub = model.gain_bound(user);
    out.sum_rate = shannon_rate(downlink.total / downlink.noise * ub * ub);
    out.rho = alpha1 >= 1.0 ? 1.0 : 0.0;
    out.power[user] = downlink.total;
    out.angles = model.aligned(user);
    return out;
  }
  BcFdmaObjective objective(alpha1, downlink.total, downlink.noise);
  const std::vector<std::vector<double>> inits{model.aligned(0), model.aligned(1)};
  auto run = detail::run_alternating(model, objective, inits, settings, seed);
  const auto aux = objective.aux();
  out.sum_rate = run.value;
  out.rho = aux[0];
  out.power = {aux[1], aux[2]};
  out.angles = std::move(run.angles);
  out.rate_history = std::move(run.history);
  return out;
}

RatePolygon bc_fdma_inner_centralized(const ChannelRealization& ch, const PowerConfig& downlink,
                                      const SolverSettings& settings) {
  settings.validate();
  std::vector<RatePair> pts;
  const auto grid = alpha_grid(settings.rate_grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto run = bc_fdma_profile(ch, downlink, grid[i], settings,
                                     derive_seed(settings.seed, (kBcFdmaStream << 32) + i));
    pts.push_back({grid[i] * run.sum_rate, (1.0 - grid[i]) * run.sum_rate});
  }
  return convex_hull(pts);
}

}  // namespace irs
