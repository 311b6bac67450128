// irs_regions: run a scenario file and write regions, tables and plots.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "irs/errors.hpp"
#include "irs/experiment.hpp"
#include "irs/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string config;
  std::string out_dir = "out";
  int seeds = 0;
  int threads = 1;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "scenario JSON file")->required();
  cmd->add_option("--out-dir", opt.out_dir, "output directory (created if missing)");
  cmd->add_option("--seeds", opt.seeds, "use this many consecutive seeds from the first configured one");
  cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
}

irs::ScenarioConfig load(const Options& opt, irs::ExperimentKind expected, bool check_kind = true) {
  auto cfg = irs::load_scenario(opt.config);
  if (check_kind && cfg.kind != expected) {
    throw irs::ConfigError(fmt::format("{} expects a '{}' scenario, got '{}'", opt.config,
                                       irs::kind_name(expected), irs::kind_name(cfg.kind)));
  }
  if (opt.seeds > 0) irs::override_seed_count(cfg, opt.seeds);
  return cfg;
}

int run(const std::string& verb, const Options& opt) {
  namespace fs = std::filesystem;
  const fs::path out(opt.out_dir);
  using irs::ExperimentKind;
  if (verb == "mac-regions" || verb == "bc-regions") {
    const bool bc = verb == "bc-regions";
    const auto cfg = load(opt, bc ? ExperimentKind::bc_regions : ExperimentKind::mac_regions);
    const auto bundle = bc ? irs::run_bc_regions(cfg, opt.threads) : irs::run_mac_regions(cfg, opt.threads);
    irs::write_bundle(bundle, out);
    fmt::print("{}: {} seeds written to {}\n", verb, bundle.seeds.size(), out.string());
  } else if (verb == "common-rate") {
    const auto cfg = load(opt, ExperimentKind::common_rate_sweep);
    const auto table = irs::run_common_rate_sweep(cfg, opt.threads);
    fs::create_directories(out);
    irs::write_text(out / "common_rate.csv", irs::common_rate_csv(table));
    for (const auto& r : table.rows) {
      fmt::print("d2={:g} m  centralized={:.4f}  distributed-best={:.4f} (M2={})  equal={:.4f}\n", r.d2_m,
                 r.centralized, r.distributed_best, r.best_m2, r.distributed_equal);
    }
  } else if (verb == "element-sweep") {
    const auto cfg = load(opt, ExperimentKind::element_allocation_sweep);
    const auto table = irs::run_element_allocation_sweep(cfg, opt.threads);
    fs::create_directories(out);
    irs::write_text(out / "element_sweep.csv", irs::element_sweep_csv(table));
    irs::write_text(out / "element_sweep_best.csv", irs::element_sweep_best_csv(table));
    for (const auto& [d2, m2] : table.best_m2) fmt::print("d2={:g} m  M2*={}\n", d2, m2);
  } else if (verb == "validate") {
    const auto cfg = load(opt, ExperimentKind::mac_regions, false);
    const auto checks = irs::run_validation(cfg, opt.threads);
    fs::create_directories(out);
    irs::write_text(out / "validation.csv", irs::validation_csv(checks));
    int failed = 0;
    for (const auto& c : checks) {
      if (!c.passed) {
        ++failed;
        fmt::print(stderr, "FAIL seed {} {}: error {:.3e} > {:.0e}\n", c.seed, c.name, c.error, c.tolerance);
      }
    }
    fmt::print("validate: {} checks, {} failed\n", checks.size(), failed);
    if (failed > 0) return kExitInvariant;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-user IRS rate-region experiments"};
  app.require_subcommand(1);
  Options opt;
  for (const char* verb : {"mac-regions", "bc-regions", "common-rate", "element-sweep", "validate"}) {
    add_common(app.add_subcommand(verb), opt);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run(verb, opt);
  } catch (const irs::ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfig;
  } catch (const irs::InvariantViolation& e) {
    fmt::print(stderr, "invariant violation: {}\n", e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
