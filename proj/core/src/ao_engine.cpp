#include "ao_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irs/element_solver.hpp"
#include "irs/rng.hpp"

namespace irs::detail {

CascadeModel CascadeModel::from(const ChannelRealization& ch) {
  CascadeModel m;
  m.direct = ch.direct;
  for (int k = 0; k < 2; ++k) {
    const auto& h = ch.cent_user_to_irs[k];
    m.cascade[k].resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) m.cascade[k][i] = ch.cent_irs_to_ap[i] * h[i];
  }
  return m;
}

std::array<Complex, 2> CascadeModel::effective(std::span<const double> angles) const {
  std::array<Complex, 2> eff = direct;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const Complex phi = std::polar(1.0, angles[i]);
    eff[0] += cascade[0][i] * phi;
    eff[1] += cascade[1][i] * phi;
  }
  return eff;
}

std::array<double, 2> CascadeModel::gains(std::span<const double> angles) const {
  const auto eff = effective(angles);
  return {std::norm(eff[0]), std::norm(eff[1])};
}

std::vector<double> CascadeModel::aligned(int user) const {
  std::vector<double> angles(cascade[user].size());
  const double ref = phase_of(direct[user]);
  for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = wrap_angle(ref - phase_of(cascade[user][i]));
  return angles;
}

double CascadeModel::gain_bound(int user) const {
  double sum = std::abs(direct[user]);
  for (const auto& c : cascade[user]) sum += std::abs(c);
  return sum;
}

namespace {

EngineResult sweep_from(const CascadeModel& model, Objective& objective, std::vector<double> start,
                        const SolverSettings& settings) {
  const int size = model.size();
  EngineResult out;
  out.angles = std::move(start);
  auto& angles = out.angles;
  objective.reset();
  double x = objective.refresh(model.gains(angles));
  out.history.push_back(x);
  auto eff = model.effective(angles);

  for (int sweep = 0; sweep < settings.max_sweeps && size > 0; ++sweep) {
    const double x_start = x;
    for (int m = 0; m < size; ++m) {
      const auto scale = objective.scales();
      std::array<AffineCoefficients, 2> scaled;
      double upper = 0.0;
      for (int k = 0; k < 2; ++k) {
        const auto c = affine_from_cascade(model.cascade[k][m], eff[k], angles[m]);
        scaled[k] = {scale[k] * c.f1, scale[k] * c.f2};
        upper += scaled[k].f1 + 2.0 * std::abs(scaled[k].f2);
      }
      const double x_cur = objective.value({std::norm(eff[0]), std::norm(eff[1])});
      const auto step = solve_element(scaled, angles[m], x_cur, std::log1p(upper) / std::numbers::ln2,
                                      [&objective](double r) { return objective.demand(r); });
      if (!step.moved || step.angle == angles[m]) continue;
      const double previous = angles[m];
      angles[m] = step.angle;
      const auto trial = model.effective(angles);
      if (objective.value({std::norm(trial[0]), std::norm(trial[1])}) >= x_cur) {
        eff = trial;
      } else {
        angles[m] = previous;
      }
    }
    const std::array<double, 2> gains{std::norm(eff[0]), std::norm(eff[1])};
    const auto saved = objective.aux();
    const double kept = objective.value(gains);
    x = objective.refresh(gains);
    if (x < kept) {
      objective.set_aux(saved);
      x = kept;
    }
    out.history.push_back(x);
    out.sweeps = sweep + 1;
    if (x - x_start <= settings.convergence_tol) break;
  }
  out.value = x;
  return out;
}

}  // namespace

EngineResult run_alternating(const CascadeModel& model, Objective& objective,
                             std::span<const std::vector<double>> inits, const SolverSettings& settings,
                             std::uint64_t seed) {
  std::vector<std::vector<double>> candidates(inits.begin(), inits.end());
  SplitMix64 rng(seed);
  for (int q = 0; q < settings.random_inits; ++q) {
    std::vector<double> angles(model.size());
    for (auto& a : angles) a = rng.angle();
    candidates.push_back(std::move(angles));
  }
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    objective.reset();
    ranked.emplace_back(objective.refresh(model.gains(candidates[i])), i);
  }
  // Best initial value first; ties keep candidate order.
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  const std::size_t starts =
      settings.ao_starts == 0 ? ranked.size() : std::min<std::size_t>(ranked.size(), settings.ao_starts);
  EngineResult best;
  std::array<double, 3> best_aux{};
  for (std::size_t s = 0; s < starts; ++s) {
    auto run = sweep_from(model, objective, candidates[ranked[s].second], settings);
    if (s == 0 || run.value > best.value) {
      best = std::move(run);
      best_aux = objective.aux();
    }
  }
  objective.set_aux(best_aux);
  return best;
}

}  // namespace irs::detail
