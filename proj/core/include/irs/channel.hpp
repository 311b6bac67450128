#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace irs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Element counts: `total` for the centralized IRS, `first` and `second` for
/// the two distributed IRSs. `first + second == total` whenever the
/// distributed links are populated.
struct ArraySizes {
  int total = 0;
  int first = 0;
  int second = 0;

  static ArraySizes even_split(int total);
  void validate() const;
};

/// All complex coefficients for one fading draw, in linear amplitude.
///
/// Distributed links: `dist_user_to_irs[k]` (user k to IRS k) and
/// `dist_irs_to_ap[k]` (IRS k to AP), each of length sizes.first/second.
/// Centralized links: `cent_user_to_irs[k]` and `cent_irs_to_ap`, length M.
struct ChannelRealization {
  std::array<Complex, 2> direct{};
  std::array<ComplexVector, 2> dist_user_to_irs;
  std::array<ComplexVector, 2> dist_irs_to_ap;
  std::array<ComplexVector, 2> cent_user_to_irs;
  ComplexVector cent_irs_to_ap;
  ArraySizes sizes;

  bool has_distributed() const;
  bool has_centralized() const;
  /// Throws ConfigError when a vector length disagrees with `sizes`.
  void validate() const;
  std::size_t distributed_length(int user) const { return dist_user_to_irs[user].size(); }
};

struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance(const Position& a, const Position& b);

/// Node placement and large-scale fading parameters.
struct GeometryConfig {
  Position ap;
  std::array<Position, 2> users;
  Position central_irs;
  std::array<Position, 2> distributed_irs;
  double gamma0 = 1e-3;             // path loss at 1 m, linear
  double exponent_direct = 3.5;
  double exponent_reflected = 3.0;

  /// The evaluation layout: AP at (0,0,10), users at (d1,0,1) and (-d2,0,1),
  /// central IRS at (0,0,9), distributed IRSs at (d1,0,2) and (-d2,0,2).
  static GeometryConfig preset(double d1, double d2);

  double horizontal_distance(int user) const;
  void validate() const;
};

/// gamma0 * (1/distance)^exponent. Throws DomainError for distance <= 0.
double path_loss(double distance, double exponent, double gamma0);

/// Transmit powers and noise, all linear. Uplink uses `user1`/`user2`; the
/// downlink uses the sum budget `total`.
struct PowerConfig {
  double user1 = 0.0;
  double user2 = 0.0;
  double total = 0.0;
  double noise = 1.0;

  static PowerConfig uplink(double p1, double p2, double noise = 1.0);
  static PowerConfig downlink(double p, double noise = 1.0);

  double user(int k) const { return k == 0 ? user1 : user2; }
  /// Received SNR per unit channel gain |h|^2 for user k.
  double snr_scale(int k) const { return user(k) / noise; }
  void validate() const;
};

/// 10^(db / 10).
double db_to_linear(double db);

/// Per-link path losses implied by a geometry.
struct LinkPathLoss {
  std::array<double, 2> direct{};
  std::array<double, 2> user_to_central_irs{};
  double central_irs_to_ap = 0.0;
};

LinkPathLoss link_path_loss(const GeometryConfig& geometry);

/// i.i.d. Rayleigh draw for the centralized links (draw order: direct_1,
/// direct_2, h_1^c[0..M), h_2^c[0..M), g^c[0..M)), with the distributed links
/// filled from the same draw by build_twin_channels.
ChannelRealization sample_rayleigh_realization(const GeometryConfig& geometry,
                                               const ArraySizes& sizes, std::uint64_t seed);

/// Distributed-side links produced by the twin identification.
struct DistributedLinks {
  std::array<ComplexVector, 2> user_to_irs;
  std::array<ComplexVector, 2> irs_to_ap;
};

/// g^c = [h_1^d; h_2^d], g_1^d = h_1^c[0..M1), g_2^d = h_2^c[M1..M).
DistributedLinks build_twin_channels(std::span<const Complex> cent_user1_to_irs,
                                     std::span<const Complex> cent_user2_to_irs,
                                     std::span<const Complex> cent_irs_to_ap, int first, int second);

/// Re-split the centralized links of `ch` into a new (first, second) pair.
ChannelRealization with_twin_split(const ChannelRealization& ch, int first, int second);

/// Copy with h_bar_1 = h_bar_2 = 0.
ChannelRealization with_zero_direct(const ChannelRealization& ch);

/// Copy with M = 0 (no IRS at all); only the direct links remain.
ChannelRealization without_irs(const ChannelRealization& ch);

/// Writes the distributed deployment as a centralized one over M1 + M2
/// elements (user k sees zeros on the other IRS's elements).
ChannelRealization embed_distributed_as_centralized(const ChannelRealization& ch);

// ---------------------------------------------------------------------------
// Reflection configuration and effective channels.

/// Phase angles (radians) for the two distributed IRSs.
struct DistributedPhases {
  std::vector<double> first;
  std::vector<double> second;
};

/// Phase angles (radians) for the single centralized IRS.
struct CentralizedPhases {
  std::vector<double> angles;
};

inline constexpr double kUnitModulusTolerance = 1e-9;

/// Angle reduced to [0, 2*pi).
double wrap_angle(double angle);

/// Angle of a complex number with arg(0) := 0.
double phase_of(Complex z);

/// h_bar_k + sum_m g_km^d phi_km^d h_km^d.
Complex effective_channel_distributed(const ChannelRealization& ch, const DistributedPhases& phases,
                                      int user);

/// h_bar_k + sum_m g_m^c phi_m^c h_km^c.
Complex effective_channel_centralized(const ChannelRealization& ch,
                                      const CentralizedPhases& phases, int user);

/// Variant taking explicit reflection coefficients; each must satisfy
/// ||phi| - 1| <= 1e-9 or a ValidationError is thrown.
Complex effective_channel_centralized(const ChannelRealization& ch,
                                      std::span<const Complex> coefficients, int user);
Complex effective_channel_distributed(const ChannelRealization& ch,
                                      std::span<const Complex> coefficients, int user);

}  // namespace irs
