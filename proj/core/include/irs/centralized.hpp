#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

/// I: user 1 decoded first. II: user 2 decoded first.
enum class DecodingOrder { I, II };

/// Rate-profile target: user 1 receives the share `alpha1` of the sum rate.
struct RateProfileProblem {
  double alpha1 = 0.5;
  DecodingOrder order = DecodingOrder::I;

  /// Index (0 or 1) of the user decoded first.
  int first_user() const { return order == DecodingOrder::I ? 0 : 1; }
  /// alpha_{pi1}: share of the first-decoded user.
  double alpha_first() const { return order == DecodingOrder::I ? alpha1 : 1.0 - alpha1; }
  void validate() const;
};

struct SolverSettings {
  int rate_grid = 100;       // L
  int power_grid = 100;      // L_P
  int oracle_grid = 360;     // L_0
  int random_inits = 200;    // Q
  int ao_starts = 0;         // AO runs from this many best-ranked starts; 0 = all
  int max_sweeps = 50;
  double convergence_tol = 1e-7;  // sum-rate gain per sweep that ends the loop
  int fdma_samples = 512;
  double sdr_tol = 1e-7;
  std::uint64_t seed = 0;    // random-initialization stream

  void validate() const;
};

/// Optimizer state after an AO run. `beta_history[0]` is the initial point,
/// one entry per completed sweep after that.
struct AOState {
  std::vector<double> angles;
  double beta = 1.0;
  int iterations = 0;
  std::vector<double> beta_history;
};

struct AOResult {
  double sum_rate = 0.0;   // r~ = log2(beta) / (1 - alpha_{pi1})
  AOState state;
};

/// alpha1 values of the uniform profile grid, endpoints included.
std::vector<double> alpha_grid(int points);

/// Largest sum rate found by AO for one profile and decoding order.
/// `extra_inits` are evaluated alongside the Q random starts.
AOResult ao_sum_rate(const ChannelRealization& ch, const PowerConfig& powers,
                     const RateProfileProblem& profile, const SolverSettings& settings,
                     std::uint64_t seed, std::span<const std::vector<double>> extra_inits = {});

/// Both orders at one alpha1; `rates` is (alpha1, 1 - alpha1) times the better.
struct ProfilePoint {
  double alpha1 = 0.0;
  std::array<AOResult, 2> runs;   // indexed by DecodingOrder
  RatePair rates;
};

std::vector<ProfilePoint> rate_profile_points(const ChannelRealization& ch, const PowerConfig& powers,
                                              const SolverSettings& settings,
                                              std::span<const std::vector<double>> extra_inits = {});

/// Hull of profile rate pairs and the origin.
RatePolygon profile_hull(std::span<const ProfilePoint> points);

RatePolygon inner_bound_region(const ChannelRealization& ch, const PowerConfig& powers,
                               const SolverSettings& settings,
                               std::span<const std::vector<double>> extra_inits = {});

/// phi_m = arg(h_bar_k) - arg(g_m h_km).
CentralizedPhases align_phases_to_user(const ChannelRealization& ch, int user);

/// Pentagon with single-user caps from the centralized gain bounds and sum
/// cap `sdr_cap`. A sum cap below max(r1, r2) is raised to it and `repaired`
/// is set; one above r1 + r2 is clamped.
PentagonRegion outer_bound_region(const ChannelRealization& ch, const PowerConfig& powers,
                                  double sdr_cap, bool* repaired = nullptr);

RatePolygon tdma_region_centralized(const ChannelRealization& ch, const PowerConfig& powers);

/// FDMA rate-profile run: (r, rho) and per-element steps alternated.
struct FdmaProfileResult {
  double alpha1 = 0.0;
  double sum_rate = 0.0;
  double rho = 0.0;
  std::array<double, 2> power{};  // downlink runs only
  std::vector<double> angles;
  std::vector<double> rate_history;
};

FdmaProfileResult fdma_profile(const ChannelRealization& ch, const PowerConfig& powers, double alpha1,
                               const SolverSettings& settings, std::uint64_t seed);

RatePolygon fdma_inner_bound_centralized(const ChannelRealization& ch, const PowerConfig& powers,
                                         const SolverSettings& settings);

/// Largest r with rho log2(1 + s1/rho) >= alpha1 r and
/// (1-rho) log2(1 + s2/(1-rho)) >= (1-alpha1) r over rho in [0,1].
/// Returns {r, rho}.
std::array<double, 2> fdma_best_split(double snr1, double snr2, double alpha1);

/// min(rho log2(1 + s1/rho) / alpha1, (1-rho) log2(1 + s2/(1-rho)) / (1-alpha1)).
double fdma_split_rate(double snr1, double snr2, double alpha1, double rho);

/// SNRs needed for sum rate r at split rho: rho (2^{alpha1 r / rho} - 1) and
/// the analogue for user 2; +inf when a band of width 0 must carry rate.
std::array<double, 2> fdma_demand(double r, double alpha1, double rho);

}  // namespace irs
