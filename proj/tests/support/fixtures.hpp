#pragma once

#include <cstdint>

#include "irs/centralized.hpp"
#include "irs/channel.hpp"

namespace fixture {

/// Evaluation layout with both users at `d` metres (d2 may differ).
inline irs::ChannelRealization draw(int m, std::uint64_t seed, double d1 = 500.0, double d2 = 500.0) {
  const auto sizes = m >= 2 ? irs::ArraySizes::even_split(m) : irs::ArraySizes{0, 0, 0};
  return irs::sample_rayleigh_realization(irs::GeometryConfig::preset(d1, d2), sizes, seed);
}

/// 120 dB transmit SNR per user with unit noise.
inline irs::PowerConfig uplink() { return irs::PowerConfig::uplink(1e12, 1e12); }
/// 123 dB at the AP.
inline irs::PowerConfig downlink() { return irs::PowerConfig::downlink(irs::db_to_linear(123.0)); }

inline irs::SolverSettings fast_settings() {
  irs::SolverSettings s;
  s.rate_grid = 11;
  s.power_grid = 11;
  s.random_inits = 20;
  s.ao_starts = 1;
  s.fdma_samples = 128;
  return s;
}

}  // namespace fixture
