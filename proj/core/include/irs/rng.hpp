#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace irs {

/// SplitMix64 used as a counter-based generator: the i-th 64-bit output of a
/// stream seeded with `s` is mix64(s + (i + 1) * 0x9E3779B97F4A7C15).
/// Gaussians come from the Box-Muller transform on 53-bit uniforms, pairs
/// consumed in order (cos branch first, then sin branch). Seeds are therefore
/// portable across platforms up to libm rounding of log/cos/sin.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform in [0, 1).
  double uniform() noexcept;

  /// Standard normal.
  double gaussian() noexcept;

  /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> complex_gaussian(double variance) noexcept;

  /// Uniform angle in [0, 2*pi).
  double angle() noexcept;

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

/// Finalizer of SplitMix64; also used to derive independent sub-seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic sub-seed for a (seed, tag) pair.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

}  // namespace irs
