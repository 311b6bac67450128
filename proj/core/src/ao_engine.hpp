#pragma once

// Shared alternating-optimization loop for the rate-profile problems. Each
// problem supplies an Objective; the loop owns the phases.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "irs/centralized.hpp"
#include "irs/channel.hpp"

namespace irs::detail {

/// Centralized channel reduced to the per-element cascades g_m h_km.
struct CascadeModel {
  std::array<Complex, 2> direct{};
  std::array<ComplexVector, 2> cascade;

  static CascadeModel from(const ChannelRealization& ch);
  int size() const { return static_cast<int>(cascade[0].size()); }
  std::array<Complex, 2> effective(std::span<const double> angles) const;
  std::array<double, 2> gains(std::span<const double> angles) const;
  /// Every element co-phased with user k's direct link.
  std::vector<double> aligned(int user) const;
  double gain_bound(int user) const;
};

/// A sum-rate problem over the phases with auxiliary variables (powers,
/// bandwidth split) held by the objective. Gains are |h_k|^2.
class Objective {
 public:
  virtual ~Objective() = default;
  /// SNR per unit gain for each user under the current auxiliaries.
  virtual std::array<double, 2> scales() const = 0;
  /// Sum rate with the auxiliaries fixed.
  virtual double value(std::array<double, 2> gains) const = 0;
  /// Required SNR per user for sum rate r under the current auxiliaries.
  virtual std::array<double, 2> demand(double r) const = 0;
  /// Optimal auxiliary step for fixed gains; returns value() afterwards.
  virtual double refresh(std::array<double, 2> gains) = 0;
  virtual void reset() {}
  virtual std::array<double, 3> aux() const { return {}; }
  virtual void set_aux(std::array<double, 3>) {}
};

struct EngineResult {
  std::vector<double> angles;
  double value = 0.0;
  std::vector<double> history;
  int sweeps = 0;
};

/// Ranks `inits` and Q random phase vectors by objective value, then runs
/// element sweeps from the best settings.ao_starts of them (all when 0) until
/// the sum rate gains less than settings.convergence_tol over a sweep or
/// settings.max_sweeps is hit. Returns the best run, whose `history` is
/// non-decreasing by construction.
EngineResult run_alternating(const CascadeModel& model, Objective& objective,
                             std::span<const std::vector<double>> inits, const SolverSettings& settings,
                             std::uint64_t seed);

}  // namespace irs::detail
