#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "irs/centralized.hpp"
#include "irs/channel.hpp"

namespace irs {

enum class ExperimentKind { mac_regions, bc_regions, common_rate_sweep, element_allocation_sweep };

/// Name used in scenario files and output file names.
std::string kind_name(ExperimentKind kind);

inline constexpr int kScenarioSchemaVersion = 1;

/// One experiment. Powers are given as SNRs in dB with sigma^2 = 1.
struct ScenarioConfig {
  ExperimentKind kind = ExperimentKind::mac_regions;
  double d1_m = 500.0;
  double d2_m = 500.0;
  double gamma0_db = -30.0;
  double exponent_direct = 3.5;
  double exponent_reflected = 3.0;
  ArraySizes sizes{30, 15, 15};
  double user1_snr_db = 120.0;
  double user2_snr_db = 120.0;
  double ap_snr_db = 123.0;
  SolverSettings solver;
  std::vector<std::uint64_t> seeds;
  bool zero_direct = false;
  std::vector<double> sweep_d2_m;   // sweeps: user-2 distances
  std::vector<int> sweep_m2;        // sweeps: M2 candidates (empty: 1..M-1)

  GeometryConfig geometry(double d2) const;
  GeometryConfig geometry() const { return geometry(d2_m); }
  PowerConfig uplink() const;
  PowerConfig downlink() const;
  std::vector<int> m2_candidates() const;
  void validate() const;
};

/// Parses a scenario document. Unknown keys and out-of-range values raise
/// ConfigError.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Replace the seed list with `count` consecutive seeds starting at the
/// first configured seed (or 1 when none).
void override_seed_count(ScenarioConfig& cfg, int count);

}  // namespace irs
