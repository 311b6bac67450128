#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ao_engine.hpp"
#include "irs/centralized.hpp"
#include "irs/distributed.hpp"
#include "irs/rng.hpp"

namespace irs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kFdmaStream = 0xFD;

double band_demand(double rate, double width) {
  if (rate <= 0.0) return 0.0;
  if (width <= 0.0) return kInf;
  return width * std::expm1(rate * std::numbers::ln2 / width);
}

class FdmaObjective final : public detail::Objective {
 public:
  FdmaObjective(double alpha1, std::array<double, 2> scale) : alpha1_(alpha1), scale_(scale) {}

  std::array<double, 2> scales() const override { return scale_; }
  double value(std::array<double, 2> g) const override {
    return fdma_split_rate(scale_[0] * g[0], scale_[1] * g[1], alpha1_, rho_);
  }
  std::array<double, 2> demand(double r) const override { return fdma_demand(r, alpha1_, rho_); }
  double refresh(std::array<double, 2> g) override {
    rho_ = fdma_best_split(scale_[0] * g[0], scale_[1] * g[1], alpha1_)[1];
    return value(g);
  }
  void reset() override { rho_ = alpha1_; }
  std::array<double, 3> aux() const override { return {rho_, 0.0, 0.0}; }
  void set_aux(std::array<double, 3> a) override { rho_ = a[0]; }

 private:
  double alpha1_;
  std::array<double, 2> scale_;
  double rho_ = 0.5;
};

}  // namespace

double fdma_split_rate(double snr1, double snr2, double alpha1, double rho) {
  const double a = alpha1 > 0.0 ? fdma_rate(rho, snr1) / alpha1 : kInf;
  const double b = alpha1 < 1.0 ? fdma_rate(1.0 - rho, snr2) / (1.0 - alpha1) : kInf;
  return std::min(a, b);
}

std::array<double, 2> fdma_demand(double r, double alpha1, double rho) {
  return {band_demand(alpha1 * r, rho), band_demand((1.0 - alpha1) * r, 1.0 - rho)};
}

std::array<double, 2> fdma_best_split(double snr1, double snr2, double alpha1) {
  if (alpha1 <= 0.0) return {shannon_rate(snr2), 0.0};
  if (alpha1 >= 1.0) return {shannon_rate(snr1), 1.0};
  // User 1's normalized rate grows with rho, user 2's shrinks: bisect the crossing.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double u1 = fdma_rate(mid, snr1) / alpha1;
    const double u2 = fdma_rate(1.0 - mid, snr2) / (1.0 - alpha1);
    (u1 < u2 ? lo : hi) = mid;
  }
  const double r_lo = fdma_split_rate(snr1, snr2, alpha1, lo);
  const double r_hi = fdma_split_rate(snr1, snr2, alpha1, hi);
  return r_hi >= r_lo ? std::array<double, 2>{r_hi, hi} : std::array<double, 2>{r_lo, lo};
}

FdmaProfileResult fdma_profile(const ChannelRealization& ch, const PowerConfig& powers, double alpha1,
                               const SolverSettings& settings, std::uint64_t seed) {
  powers.validate();
  const auto model = detail::CascadeModel::from(ch);
  FdmaProfileResult out;
  out.alpha1 = alpha1;
  if (alpha1 <= 0.0 || alpha1 >= 1.0) {
    const int user = alpha1 >= 1.0 ? 0 : 1;
    const double ub = model.gain_bound(user);
    out.sum_rate = shannon_rate(powers.snr_scale(user) * ub * ub);
    out.rho = alpha1 >= 1.0 ? 1.0 : 0.0;
    out.angles = model.aligned(user);
    return out;
  }
  FdmaObjective objective(alpha1, {powers.snr_scale(0), powers.snr_scale(1)});
  const std::vector<std::vector<double>> inits{model.aligned(0), model.aligned(1)};
  auto run = detail::run_alternating(model, objective, inits, settings, seed);
  out.sum_rate = run.value;
  out.rho = objective.aux()[0];
  out.angles = std::move(run.angles);
  out.rate_history = std::move(run.history);
  return out;
}

RatePolygon fdma_inner_bound_centralized(const ChannelRealization& ch, const PowerConfig& powers,
                                         const SolverSettings& settings) {
  settings.validate();
  const auto model = detail::CascadeModel::from(ch);
  std::vector<RatePair> pts;
  const auto grid = alpha_grid(settings.rate_grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto run = fdma_profile(ch, powers, grid[i], settings,
                                  derive_seed(settings.seed, (kFdmaStream << 32) + i));
    pts.push_back({grid[i] * run.sum_rate, (1.0 - grid[i]) * run.sum_rate});
  }
  for (int k = 0; k < 2; ++k) {
    const auto g = model.gains(model.aligned(k));
    const auto curve = fdma_curve_region(powers.snr_scale(0) * g[0], powers.snr_scale(1) * g[1],
                                         settings.fdma_samples);
    pts.insert(pts.end(), curve.vertices().begin(), curve.vertices().end());
  }
  return convex_hull(pts);
}

}  // namespace irs
