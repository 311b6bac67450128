#include "irs/element_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "irs/errors.hpp"

namespace irs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-13;

}  // namespace

AffineCoefficients affine_from_cascade(Complex cascade, Complex effective, double angle) {
  const Complex rest = effective - cascade * std::polar(1.0, angle);
  return {std::norm(rest) + std::norm(cascade), cascade * std::conj(rest)};
}

AffineCoefficients affine_coefficients(const ChannelRealization& ch, std::span<const double> angles,
                                       int user, int element) {
  if (user != 0 && user != 1) throw ConfigError(fmt::format("user index must be 0 or 1, got {}", user));
  const auto& h = ch.cent_user_to_irs[user];
  if (angles.size() != h.size()) throw ConfigError("angle count does not match M");
  if (element < 0 || static_cast<std::size_t>(element) >= h.size()) {
    throw ConfigError(fmt::format("element {} out of range", element));
  }
  Complex rest = ch.direct[user];
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (static_cast<int>(i) == element) continue;
    rest += ch.cent_irs_to_ap[i] * std::polar(1.0, angles[i]) * h[i];
  }
  const Complex c = ch.cent_irs_to_ap[element] * h[element];
  return {std::norm(rest) + std::norm(c), c * std::conj(rest)};
}

double lift_to_unit_modulus(const LiftCase& c) {
  if (c.b >= 1.0) return c.lambda;
  const bool zero1 = c.a1 == 0.0;
  const bool zero2 = c.a2 == 0.0;
  if (zero1 && zero2) return c.lambda;
  // With one coefficient zero, its constraint does not depend on phi.
  if (zero1) return wrap_angle(-c.eta2);
  if (zero2) return wrap_angle(-c.eta1);

  const double x1 = wrap_angle(c.eta1 + c.lambda);
  const double x2 = wrap_angle(c.eta2 + c.lambda);
  const bool pos1 = std::cos(x1) >= 0.0;
  const bool pos2 = std::cos(x2) >= 0.0;
  if (pos1 && pos2) return c.lambda;
  if (!pos1 && !pos2) return wrap_angle(c.lambda + kPi);

  // Mixed signs: x is the angle whose real part is nonnegative, y the other.
  const double x = pos1 ? x1 : x2;
  const double y = pos1 ? x2 : x1;
  const double grow = std::acos(std::clamp(c.b, -1.0, 1.0));
  const double keep = std::acos(std::clamp(c.b * std::cos(x), -1.0, 1.0));
  double delta = 0.0;
  if (x <= kPi / 2) {
    if (y <= kPi) {
      delta = -grow;
    } else {
      delta = y - kPi < x ? -x - keep : -x + keep;
    }
  } else {
    if (y >= kPi) {
      delta = grow;
    } else {
      delta = y + kPi >= x ? -x + keep : -x - keep;
    }
  }
  return wrap_angle(c.lambda + delta);
}

std::optional<Complex> disk_feasible_point(const HalfPlane& a, const HalfPlane& b) {
  const HalfPlane planes[2] = {a, b};
  Complex candidates[7];
  int n = 0;
  candidates[n++] = Complex{};
  for (const auto& p : planes) {
    const double mag = std::abs(p.f);
    if (mag == 0.0) continue;
    const Complex u = std::conj(p.f) / mag;
    candidates[n++] = u;
    double c = p.t / mag;
    if (std::abs(c) <= 1.0 + 1e-12) {
      c = std::clamp(c, -1.0, 1.0);
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      candidates[n++] = u * Complex(c, s);
      candidates[n++] = u * Complex(c, -s);
    }
  }

  std::optional<Complex> best;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    Complex z = candidates[i];
    const double r = std::abs(z);
    if (r > 1.0) z /= r;
    double margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const auto& p : planes) {
      const double slack = (p.f * z).real() - p.t;
      const double eps = kSlack * (std::abs(p.f) + std::abs(p.t));
      if (slack < -eps) {
        ok = false;
        break;
      }
      margin = std::min(margin, slack);
    }
    if (ok && margin > best_margin) {
      best_margin = margin;
      best = z;
    }
  }
  return best;
}

ElementStep solve_element(const std::array<AffineCoefficients, 2>& scaled, double current_angle,
                          double x_current, double x_upper,
                          const std::function<std::array<double, 2>(double)>& demand, double tol) {
  ElementStep step{x_current, current_angle, false};
  const auto feasible = [&](double x) -> std::optional<Complex> {
    const auto d = demand(x);
    if (!std::isfinite(d[0]) || !std::isfinite(d[1])) return std::nullopt;
    return disk_feasible_point(HalfPlane{scaled[0].f2, 0.5 * (d[0] - scaled[0].f1)},
                               HalfPlane{scaled[1].f2, 0.5 * (d[1] - scaled[1].f1)});
  };

  double lo = x_current;
  double hi = x_upper;
  if (!(hi > lo)) return step;
  std::optional<Complex> point = feasible(hi);
  if (point) {
    lo = hi;
  } else {
    for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (auto p = feasible(mid)) {
        lo = mid;
        point = p;
      } else {
        hi = mid;
      }
    }
  }
  if (!point) return step;

  const Complex phi = *point;
  const double b = std::abs(phi);
  double angle = phase_of(phi);
  if (b < 1.0) {
    angle = lift_to_unit_modulus(LiftCase{std::abs(scaled[0].f2), phase_of(scaled[0].f2),
                                          std::abs(scaled[1].f2), phase_of(scaled[1].f2), b, angle});
  }
  step.value = lo;
  step.angle = wrap_angle(angle);
  step.moved = true;
  return step;
}

std::array<double, 2> profile_demand(double rate, double alpha_first) {
  const double r = std::max(0.0, rate);
  const double second = std::expm1((1.0 - alpha_first) * r * std::numbers::ln2);
  const double first = (1.0 + second) * std::expm1(alpha_first * r * std::numbers::ln2);
  return {first, second};
}

double profile_rate(double snr_first, double snr_second, double alpha_first) {
  if (!(alpha_first >= 0.0 && alpha_first < 1.0)) {
    throw DomainError(fmt::format("profile_rate needs alpha in [0, 1), got {}", alpha_first));
  }
  const double cap = std::log1p(std::max(0.0, snr_second)) / std::numbers::ln2 / (1.0 - alpha_first);
  const double target = std::max(0.0, snr_first);
  if (profile_demand(cap, alpha_first)[0] <= target) return cap;
  double lo = 0.0;
  double hi = cap;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (profile_demand(mid, alpha_first)[0] <= target ? lo : hi) = mid;
  }
  return lo;
}

P3mResult solve_p3m(const std::array<AffineCoefficients, 2>& coeffs, std::array<double, 2> scale,
                    double alpha_first, double beta_current, double current_angle) {
  if (!(alpha_first >= 0.0 && alpha_first < 1.0)) {
    throw DomainError(fmt::format("solve_p3m needs alpha in [0, 1), got {}", alpha_first));
  }
  std::array<AffineCoefficients, 2> scaled;
  double upper_snr = 0.0;
  for (int k = 0; k < 2; ++k) {
    scaled[k] = {scale[k] * coeffs[k].f1, scale[k] * coeffs[k].f2};
    upper_snr += scaled[k].f1 + 2.0 * std::abs(scaled[k].f2);
  }
  const double share = 1.0 - alpha_first;
  const double r_current = std::log2(std::max(1.0, beta_current)) / share;
  const double r_upper = std::log1p(upper_snr) / std::numbers::ln2;
  const auto step = solve_element(scaled, current_angle, r_current, r_upper,
                                  [alpha_first](double r) { return profile_demand(r, alpha_first); });

  P3mResult out{beta_current, current_angle};
  if (!step.moved) return out;
  const Complex phi = std::polar(1.0, step.angle);
  std::array<double, 2> snr;
  for (int k = 0; k < 2; ++k) snr[k] = scaled[k].f1 + 2.0 * (scaled[k].f2 * phi).real();
  const double beta = std::exp2(share * profile_rate(snr[0], snr[1], alpha_first));
  if (beta >= beta_current) out = {beta, step.angle};
  return out;
}

}  // namespace irs
