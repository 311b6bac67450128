#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "irs/region.hpp"
#include "irs/scenario.hpp"
#include "irs/serialize.hpp"

namespace irs {

struct NamedRegion {
  std::string name;
  RatePolygon polygon;
};

struct SeedRegions {
  std::uint64_t seed = 0;
  std::vector<NamedRegion> regions;
  std::vector<TraceRow> trace;

  /// Throws ConfigError when no region has this name.
  const RatePolygon& region(const std::string& name) const;
};

struct RegionBundle {
  ExperimentKind kind = ExperimentKind::mac_regions;
  std::vector<SeedRegions> seeds;   // ordered as cfg.seeds
};

/// Region names in emission order.
std::vector<std::string> mac_region_names();
std::vector<std::string> bc_region_names();

/// One seed of the MAC comparison. M = 0 yields the no-IRS pentagon only.
SeedRegions mac_regions_for_seed(const ScenarioConfig& cfg, std::uint64_t seed);
SeedRegions bc_regions_for_seed(const ScenarioConfig& cfg, std::uint64_t seed);

/// Containment checks a bundle must pass before it is written. Returns one
/// message per failed check.
std::vector<std::string> containment_failures(const SeedRegions& regions, bool zero_direct);

/// Runs every seed on `threads` workers; throws InvariantViolation when any
/// seed fails its containment checks.
RegionBundle run_mac_regions(const ScenarioConfig& cfg, int threads = 1);
RegionBundle run_bc_regions(const ScenarioConfig& cfg, int threads = 1);

/// Per-distance means of the maximum common rate.
struct CommonRateRow {
  double d2_m = 0.0;
  double centralized = 0.0;
  double distributed_equal = 0.0;
  double distributed_best = 0.0;
  int best_m2 = 0;   // argmax over M2 of the mean distributed common rate
};

struct CommonRateTable {
  std::vector<CommonRateRow> rows;
};

/// Mean common rate per (distance, M2) for the distributed deployment.
struct ElementSweepRow {
  double d2_m = 0.0;
  int m2 = 0;
  double mean_common_rate = 0.0;
};

struct ElementSweepTable {
  std::vector<ElementSweepRow> rows;
  std::vector<std::pair<double, int>> best_m2;   // (d2, M2*) per distance
};

CommonRateTable run_common_rate_sweep(const ScenarioConfig& cfg, int threads = 1);
ElementSweepTable run_element_allocation_sweep(const ScenarioConfig& cfg, int threads = 1);

/// Oracle and property checks for small surfaces (M <= 3).
struct ValidationCheck {
  std::uint64_t seed = 0;
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<ValidationCheck> run_validation(const ScenarioConfig& cfg, int threads = 1);

// Writers. Every file is a pure function of its input, so re-runs with the
// same configuration produce identical bytes.
std::string bundle_json(const RegionBundle& bundle);
std::string bundle_csv(const RegionBundle& bundle);
std::string bundle_trace_csv(const RegionBundle& bundle);
std::string common_rate_csv(const CommonRateTable& table);
std::string element_sweep_csv(const ElementSweepTable& table);
std::string element_sweep_best_csv(const ElementSweepTable& table);
std::string validation_csv(const std::vector<ValidationCheck>& checks);

/// regions.json, regions.csv, trace.csv and one SVG per seed.
void write_bundle(const RegionBundle& bundle, const std::filesystem::path& out_dir);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace irs
