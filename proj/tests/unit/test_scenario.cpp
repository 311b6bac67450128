#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "irs/errors.hpp"
#include "irs/scenario.hpp"

using namespace irs;

namespace {

const char* kMinimal = R"({"schema_version": 1, "kind": "mac-regions"})";

}  // namespace

TEST(Scenario, MinimalDocumentTakesDefaults) {
  const auto cfg = parse_scenario(kMinimal);
  EXPECT_EQ(cfg.kind, ExperimentKind::mac_regions);
  EXPECT_EQ(cfg.sizes.total, 30);
  EXPECT_EQ(cfg.sizes.first, 15);
  EXPECT_EQ(cfg.seeds.size(), 100u);
  EXPECT_EQ(cfg.seeds.front(), 1u);
  EXPECT_EQ(cfg.solver.rate_grid, 100);
  EXPECT_EQ(cfg.solver.random_inits, 200);
}

TEST(Scenario, FullDocument) {
  const auto cfg = parse_scenario(R"({
    "schema_version": 1, "kind": "element-sweep", "description": "x",
    "geometry": {"d1_m": 200, "d2_m": 300, "gamma0_db": -20, "exponent_direct": 3.0, "exponent_reflected": 2.5},
    "sizes": {"M": 12},
    "powers": {"user1_snr_db": 100, "user2_snr_db": 110, "ap_snr_db": 113},
    "solver": {"L": 21, "L_P": 31, "L_0": 90, "Q": 7, "ao_starts": 2, "max_sweeps": 9,
               "convergence_tol": 1e-6, "fdma_samples": 64, "sdr_tol": 1e-8},
    "seeds": [5, 9],
    "zero_direct": true,
    "sweep": {"d2_m": [200, 400], "m2": [3, 6]}
  })");
  EXPECT_EQ(cfg.kind, ExperimentKind::element_allocation_sweep);
  EXPECT_EQ(cfg.sizes.first, 6);
  EXPECT_EQ(cfg.sizes.second, 6);
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{5, 9}));
  EXPECT_EQ(cfg.solver.power_grid, 31);
  EXPECT_EQ(cfg.solver.ao_starts, 2);
  EXPECT_TRUE(cfg.zero_direct);
  EXPECT_EQ(cfg.m2_candidates(), (std::vector<int>{3, 6}));
  EXPECT_NEAR(cfg.uplink().user2, 1e11, 1e-3);
  EXPECT_NEAR(cfg.downlink().total, std::pow(10.0, 11.3), 1e-3);
  EXPECT_NEAR(cfg.geometry().gamma0, 1e-2, 1e-15);
  EXPECT_NEAR(cfg.geometry(400.0).horizontal_distance(1), 400.0, 1e-9);
}

TEST(Scenario, SeedRangeAndOverride) {
  auto cfg = parse_scenario(R"({"schema_version": 1, "kind": "bc-regions", "seeds": {"base": 10, "count": 3}})");
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{10, 11, 12}));
  override_seed_count(cfg, 2);
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{10, 11}));
  EXPECT_THROW(override_seed_count(cfg, 0), ConfigError);
}

TEST(Scenario, SweepDefaultsToAllSplits) {
  const auto cfg = parse_scenario(
      R"({"schema_version": 1, "kind": "common-rate", "sizes": {"M": 4}, "sweep": {"d2_m": [300]}})");
  EXPECT_EQ(cfg.m2_candidates(), (std::vector<int>{1, 2, 3}));
}

TEST(Scenario, Rejections) {
  const char* bad[] = {
      R"({"schema_version": 2, "kind": "mac-regions"})",
      R"({"schema_version": 1, "kind": "nope"})",
      R"({"schema_version": 1, "kind": "mac-regions", "extra": 1})",
      R"({"schema_version": 1, "kind": "mac-regions", "solver": {"L": 1}})",
      R"({"schema_version": 1, "kind": "mac-regions", "solver": {"typo": 1}})",
      R"({"schema_version": 1, "kind": "mac-regions", "sizes": {"M": 1}})",
      R"({"schema_version": 1, "kind": "mac-regions", "sizes": {"M": 4, "M1": 1, "M2": 2}})",
      R"({"schema_version": 1, "kind": "mac-regions", "seeds": {"count": 0}})",
      R"({"schema_version": 1, "kind": "mac-regions", "geometry": {"d1_m": -5}})",
      R"({"schema_version": 1, "kind": "common-rate"})",
      R"({"schema_version": 1, "kind": "common-rate", "sweep": {"d2_m": [300], "m2": [30]}})",
      R"({"schema_version": 1, "kind": "mac-regions", "solver": {"L": "ten"}})",
      R"({"schema_version": 1, "kind": "mac-regions",)",
      R"([1, 2])",
  };
  for (const char* doc : bad) EXPECT_THROW(parse_scenario(doc), ConfigError) << doc;
}

TEST(Scenario, NoSurfaceIsAllowed) {
  const auto cfg = parse_scenario(R"({"schema_version": 1, "kind": "mac-regions", "sizes": {"M": 0}})");
  EXPECT_EQ(cfg.sizes.total, 0);
}

TEST(Scenario, ShippedScenariosLoad) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(IRS_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_scenario(entry.path())) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 6);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), ConfigError);
}

TEST(Scenario, KindNames) {
  EXPECT_EQ(kind_name(ExperimentKind::mac_regions), "mac-regions");
  EXPECT_EQ(kind_name(ExperimentKind::bc_regions), "bc-regions");
  EXPECT_EQ(kind_name(ExperimentKind::common_rate_sweep), "common-rate");
  EXPECT_EQ(kind_name(ExperimentKind::element_allocation_sweep), "element-sweep");
}
