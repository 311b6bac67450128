#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>

#include "irs/channel.hpp"

namespace irs {

/// |h_k(phi_m)|^2 = f1 + 2 Re{f2 phi_m} for unit-modulus phi_m, all other
/// elements held fixed.
struct AffineCoefficients {
  double f1 = 0.0;
  Complex f2{};
};

/// f1 = |rest|^2 + |g_m h_km|^2, f2 = g_m h_km conj(rest) with
/// rest = h_bar_k + sum_{i != m} g_i phi_i h_ki. `angles` has length M.
AffineCoefficients affine_coefficients(const ChannelRealization& ch, std::span<const double> angles,
                                       int user, int element);

/// Same, from the per-element cascade g_m h_km and the full effective channel.
AffineCoefficients affine_from_cascade(Complex cascade, Complex effective, double angle);

/// Inputs of the unit-modulus lift: f2 of both constraints in polar form and
/// the relaxed solution b e^{j lambda} with b < 1.
struct LiftCase {
  double a1 = 0.0;
  double eta1 = 0.0;
  double a2 = 0.0;
  double eta2 = 0.0;
  double b = 0.0;
  double lambda = 0.0;
};

/// Angle theta with Re{a_i e^{j(eta_i + theta)}} >= b Re{a_i e^{j(eta_i + lambda)}}
/// for i = 1, 2. Returns lambda unchanged when b >= 1.
double lift_to_unit_modulus(const LiftCase& c);

/// Re{F phi} >= t.
struct HalfPlane {
  Complex f{};
  double t = 0.0;
};

/// A point of the closed unit disk satisfying both half-planes, if any.
/// Constraints are checked with a relative slack of ~1e-13.
std::optional<Complex> disk_feasible_point(const HalfPlane& a, const HalfPlane& b);

/// Outcome of one single-element update.
struct ElementStep {
  double value = 0.0;   // bisection variable reached (>= the starting value)
  double angle = 0.0;   // unit-modulus solution after the lift
  bool moved = false;   // false when the current angle was kept
};

/// Maximize x over phi_m in the disk subject to
///   F1_k + 2 Re{F2_k phi} >= demand(x)[k],  k = 0, 1,
/// where F are SNR-scaled affine coefficients and demand is nondecreasing in
/// x. Bisection on [x_current, x_upper] to absolute tolerance `tol`, then
/// the Delta-lambda lift to |phi| = 1.
ElementStep solve_element(const std::array<AffineCoefficients, 2>& scaled, double current_angle,
                          double x_current, double x_upper,
                          const std::function<std::array<double, 2>(double)>& demand,
                          double tol = 1e-10);

/// Rate-profile element subproblem for one decoding order. `coeffs` are
/// unscaled (|h|^2 units) and indexed by decoding position: [0] is the user
/// decoded first, with rate share `alpha_first` < 1 and SNR scale `scale[0]`.
/// Returns the largest beta = 2^{(1 - alpha_first) r} found and the lifted
/// angle; beta >= `beta_current`.
struct P3mResult {
  double beta = 1.0;
  double angle = 0.0;
};
P3mResult solve_p3m(const std::array<AffineCoefficients, 2>& coeffs, std::array<double, 2> scale,
                    double alpha_first, double beta_current, double current_angle);

/// Required SNRs for sum rate r under a rate profile: first-decoded user
/// 2^r - 2^{(1-alpha) r}, second 2^{(1-alpha) r} - 1.
std::array<double, 2> profile_demand(double r, double alpha_first);

/// Largest r with snr_first >= 2^r - 2^{(1-alpha) r} and
/// snr_second >= 2^{(1-alpha) r} - 1. Requires alpha_first < 1.
double profile_rate(double snr_first, double snr_second, double alpha_first);

}  // namespace irs
