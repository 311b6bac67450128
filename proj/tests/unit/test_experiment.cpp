#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>
#include <unistd.h>

#include <fmt/format.h>

#include "irs/errors.hpp"
#include "irs/experiment.hpp"
#include "irs/svg.hpp"

using namespace irs;
namespace fs = std::filesystem;

namespace {

ScenarioConfig tiny(const std::string& kind, int m = 4) {
  return parse_scenario(fmt::format(R"({{
    "schema_version": 1, "kind": "{}", "sizes": {{"M": {}}},
    "solver": {{"L": 5, "L_P": 5, "Q": 4, "ao_starts": 1, "fdma_samples": 32}},
    "seeds": [3, 4], "sweep": {{"d2_m": [300, 500]}}
  }})",
                                    kind, m));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / fmt::format("irs_test_{}_{}", name, ::getpid());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Experiment, NoSurfaceGivesOnlyDirectLinkRegion) {
  auto cfg = tiny("mac-regions", 0);
  const auto seed = mac_regions_for_seed(cfg, 3);
  ASSERT_EQ(seed.regions.size(), 1u);
  EXPECT_EQ(seed.regions[0].name, "no-irs");
  EXPECT_THROW(seed.region("distributed-capacity"), ConfigError);
}

TEST(Experiment, MacBundleHasEveryRegion) {
  const auto bundle = run_mac_regions(tiny("mac-regions"));
  ASSERT_EQ(bundle.seeds.size(), 2u);
  const auto names = mac_region_names();
  EXPECT_EQ(names.size(), 9u);
  for (const auto& s : bundle.seeds) {
    ASSERT_EQ(s.regions.size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(s.regions[i].name, names[i]);
    EXPECT_TRUE(containment_failures(s, false).empty());
    EXPECT_FALSE(s.trace.empty());
  }
}

TEST(Experiment, BcBundleHasEveryRegion) {
  const auto bundle = run_bc_regions(tiny("bc-regions"));
  for (const auto& s : bundle.seeds) {
    EXPECT_EQ(s.regions.size(), bc_region_names().size());
    EXPECT_TRUE(containment_failures(s, false).empty());
  }
}

TEST(Experiment, ContainmentDetectsViolations) {
  auto s = mac_regions_for_seed(tiny("mac-regions"), 3);
  for (auto& r : s.regions) {
    if (r.name == "centralized-inner") {
      const std::vector<RatePair> big{{0, 0}, {100, 0}, {0, 100}};
      r.polygon = convex_hull(big);
    }
  }
  EXPECT_FALSE(containment_failures(s, false).empty());
}

TEST(Experiment, WritersAreDeterministic) {
  const auto cfg = tiny("mac-regions");
  const auto a = run_mac_regions(cfg, 1);
  const auto b = run_mac_regions(cfg, 2);
  EXPECT_EQ(bundle_json(a), bundle_json(b));
  EXPECT_EQ(bundle_csv(a), bundle_csv(b));
  EXPECT_EQ(bundle_trace_csv(a), bundle_trace_csv(b));
  EXPECT_EQ(bundle_csv(a).rfind("seed,region,vertex,r1,r2\n", 0), 0u);

  const auto d1 = scratch("w1");
  const auto d2 = scratch("w2");
  write_bundle(a, d1);
  write_bundle(b, d2);
  for (const auto* f : {"regions.json", "regions.csv", "trace.csv", "mac_seed_3.svg", "mac_seed_4.svg"}) {
    ASSERT_TRUE(fs::exists(d1 / f)) << f;
    EXPECT_EQ(slurp(d1 / f), slurp(d2 / f)) << f;
  }
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST(Experiment, ElementSweepCoversEverySplit) {
  const auto table = run_element_allocation_sweep(tiny("element-sweep"));
  ASSERT_EQ(table.rows.size(), 6u);   // 2 distances x M2 in {1, 2, 3}
  EXPECT_EQ(table.rows.back().m2, 3);
  ASSERT_EQ(table.best_m2.size(), 2u);
  for (const auto& [d2, m2] : table.best_m2) {
    double best = -1.0;
    int arg = 0;
    for (const auto& r : table.rows) {
      if (r.d2_m == d2 && r.mean_common_rate > best) {
        best = r.mean_common_rate;
        arg = r.m2;
      }
    }
    EXPECT_EQ(m2, arg);
  }
  EXPECT_EQ(element_sweep_csv(table).substr(0, 5), "d2_m,");
}

TEST(Experiment, CommonRateTableIsConsistent) {
  const auto cfg = tiny("common-rate");
  const auto table = run_common_rate_sweep(cfg);
  ASSERT_EQ(table.rows.size(), 2u);
  for (const auto& r : table.rows) {
    EXPECT_GE(r.distributed_best, r.distributed_equal - 1e-12);
    EXPECT_GT(r.centralized, 0.0);
    EXPECT_GE(r.best_m2, 1);
    EXPECT_LE(r.best_m2, 3);
  }
  EXPECT_EQ(common_rate_csv(table).rfind("d2_m,centralized_inner,distributed_equal,distributed_best,best_m2,gap\n", 0),
            0u);
}

TEST(Experiment, ValidationPassesOnSmallSurface) {
  auto cfg = tiny("mac-regions", 2);
  cfg.solver.ao_starts = 0;
  cfg.solver.random_inits = 50;
  cfg.solver.oracle_grid = 180;
  cfg.seeds = {1};
  const auto checks = run_validation(cfg);
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " error " << c.error;
  cfg.sizes = ArraySizes::even_split(4);
  EXPECT_THROW(run_validation(cfg), ConfigError);
}

TEST(Experiment, ParallelForRethrows) {
  std::atomic<int> calls{0};
  parallel_for(10, 3, [&](int) { ++calls; });
  EXPECT_EQ(calls.load(), 10);
  EXPECT_THROW(parallel_for(10, 3,
                            [](int i) {
                              if (i == 4) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Svg, MatchesGoldenFile) {
  const std::vector<RatePair> tri{{0, 0}, {3, 0}, {0, 2}};
  const std::vector<RatePair> pent{{0, 0}, {4, 0}, {4, 1.5}, {2.5, 3}, {0, 3}};
  const std::vector<NamedRegion> regions{{"tdma", convex_hull(tri)}, {"capacity", convex_hull(pent)}};
  const auto svg = render_plot(regions, {"golden", 640, 480});
  const fs::path golden = fs::path(IRS_GOLDEN_DIR) / "two_regions.svg";
  if (std::getenv("IRS_UPDATE_GOLDEN")) write_text(golden, svg);
  EXPECT_EQ(svg, slurp(golden));
  EXPECT_EQ(svg, render_plot(regions, {"golden", 640, 480}));
}

TEST(Svg, EmptyPlotHasAxesOnly) {
  const auto svg = render_plot({}, {"empty"});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("bps/Hz"), std::string::npos);
  EXPECT_EQ(svg.find("<polygon"), std::string::npos);
}

#ifdef IRS_CLI_PATH
TEST(Cli, ExitCodes) {
  const auto dir = scratch("cli");
  const auto run = [&](const std::string& args) {
    const int status = std::system(fmt::format("\"{}\" {} > /dev/null 2>&1", IRS_CLI_PATH, args).c_str());
    return WEXITSTATUS(status);
  };
  write_text(dir / "bad.json", R"({"schema_version": 1, "kind": "mac-regions", "oops": 1})");
  write_text(dir / "ok.json", R"({"schema_version": 1, "kind": "mac-regions", "sizes": {"M": 2},
    "solver": {"L": 3, "Q": 2, "fdma_samples": 8}, "seeds": [1]})");
  EXPECT_EQ(run(fmt::format("mac-regions --config {}", (dir / "bad.json").string())), 2);
  EXPECT_EQ(run(fmt::format("bc-regions --config {} --out-dir {}", (dir / "ok.json").string(), dir.string())), 2);
  EXPECT_EQ(run(fmt::format("mac-regions --config {} --out-dir {}", (dir / "ok.json").string(),
                            (dir / "out").string())),
            0);
  EXPECT_TRUE(fs::exists(dir / "out" / "regions.json"));
  EXPECT_NE(run("no-such-verb"), 0);
  fs::remove_all(dir);
}
#endif
