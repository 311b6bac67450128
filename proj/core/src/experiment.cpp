#include "irs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "irs/broadcast.hpp"
#include "irs/brute_force.hpp"
#include "irs/centralized.hpp"
#include "irs/distributed.hpp"
#include "irs/element_solver.hpp"
#include "irs/errors.hpp"
#include "irs/rng.hpp"
#include "irs/sdr.hpp"
#include "irs/svg.hpp"
#include "irs/twin.hpp"

namespace irs {

namespace {

constexpr double kOmaTolerance = 1e-9;
constexpr double kBoundTolerance = 1e-6;

ChannelRealization draw(const ScenarioConfig& cfg, double d2, std::uint64_t seed) {
  auto ch = sample_rayleigh_realization(cfg.geometry(d2), cfg.sizes, seed);
  return cfg.zero_direct ? with_zero_direct(ch) : ch;
}

SolverSettings settings_for(const ScenarioConfig& cfg, std::uint64_t seed) {
  SolverSettings s = cfg.solver;
  s.seed = derive_seed(seed, 1);
  return s;
}

/// Starting points offered to the centralized optimizers besides the
/// aligned and random ones: the distributed optimum laid side by side and,
/// without direct links, its rotated twin lift.
std::vector<std::vector<double>> twin_inits(const ChannelRealization& ch) {
  std::vector<std::vector<double>> out;
  if (!ch.has_distributed() || !ch.has_centralized()) return out;
  out.push_back(heuristic_twin_phases(ch).angles);
  if (ch.direct[0] == Complex{} && ch.direct[1] == Complex{}) {
    out.push_back(twin_lift_construction(ch).phases.angles);
  }
  return out;
}

void append_trace(std::vector<TraceRow>& rows, std::uint64_t seed, const std::string& problem,
                  const std::vector<ProfilePoint>& points) {
  for (const auto& p : points) {
    for (int o = 0; o < 2; ++o) {
      const auto& hist = p.runs[o].state.beta_history;
      for (std::size_t i = 0; i < hist.size(); ++i) {
        rows.push_back({seed, problem, p.alpha1, o + 1, static_cast<int>(i), hist[i]});
      }
    }
  }
}

RatePolygon union_of_pentagons(const std::vector<PowerConfig>& splits,
                               const std::function<PentagonRegion(const PowerConfig&)>& fn) {
  std::vector<RatePolygon> parts;
  for (const auto& p : splits) parts.push_back(pentagon_vertices(fn(p)));
  return union_hull(parts);
}

void check(std::vector<std::string>& out, const SeedRegions& r, const std::string& outer,
           const std::string& inner, double tol) {
  const double excess = containment_excess(r.region(outer), r.region(inner));
  if (excess > tol) {
    out.push_back(fmt::format("seed {}: {} not inside {} (excess {:.3e}, tol {:.0e})", r.seed, inner, outer,
                              excess, tol));
  }
}

RegionBundle run_regions(const ScenarioConfig& cfg, int threads,
                         SeedRegions (*per_seed)(const ScenarioConfig&, std::uint64_t)) {
  cfg.validate();
  RegionBundle bundle;
  bundle.kind = cfg.kind;
  bundle.seeds.resize(cfg.seeds.size());
  parallel_for(static_cast<int>(cfg.seeds.size()), threads,
               [&](int i) { bundle.seeds[i] = per_seed(cfg, cfg.seeds[i]); });
  std::vector<std::string> failures;
  for (const auto& s : bundle.seeds) {
    auto f = containment_failures(s, cfg.zero_direct);
    failures.insert(failures.end(), f.begin(), f.end());
  }
  if (!failures.empty()) {
    std::string msg = "containment checks failed:";
    for (const auto& f : failures) msg += "\n  " + f;
    throw InvariantViolation(msg);
  }
  return bundle;
}

double distributed_common_rate(const ChannelRealization& ch, const PowerConfig& powers, int m2) {
  const auto split = with_twin_split(ch, ch.sizes.total - m2, m2);
  return max_common_rate(pentagon_vertices(capacity_region_distributed(split, powers)));
}

}  // namespace

const RatePolygon& SeedRegions::region(const std::string& name) const {
  for (const auto& r : regions) {
    if (r.name == name) return r.polygon;
  }
  throw ConfigError(fmt::format("seed {} has no region named '{}'", seed, name));
}

std::vector<std::string> mac_region_names() {
  return {"no-irs",           "distributed-capacity", "distributed-tdma",
          "distributed-fdma", "centralized-inner",    "centralized-outer",
          "centralized-tdma", "centralized-fdma-inner", "centralized-heuristic"};
}

std::vector<std::string> bc_region_names() { return mac_region_names(); }

SeedRegions mac_regions_for_seed(const ScenarioConfig& cfg, std::uint64_t seed) {
  const auto ch = draw(cfg, cfg.d2_m, seed);
  const auto powers = cfg.uplink();
  const auto settings = settings_for(cfg, seed);
  SeedRegions out;
  out.seed = seed;
  out.regions.push_back({"no-irs", pentagon_vertices(capacity_region_distributed(without_irs(ch), powers))});
  if (cfg.sizes.total == 0) return out;

  out.regions.push_back({"distributed-capacity", pentagon_vertices(capacity_region_distributed(ch, powers))});
  out.regions.push_back({"distributed-tdma", tdma_region_distributed(ch, powers)});
  out.regions.push_back({"distributed-fdma", fdma_region_distributed(ch, powers, settings.fdma_samples)});

  const auto inits = twin_inits(ch);
  const auto points = rate_profile_points(ch, powers, settings, inits);
  append_trace(out.trace, seed, "mac-profile", points);
  out.regions.push_back({"centralized-inner", profile_hull(points)});
  const double cap = sum_rate_upper_bound(ch, powers, settings.sdr_tol);
  out.regions.push_back({"centralized-outer", pentagon_vertices(outer_bound_region(ch, powers, cap))});
  out.regions.push_back({"centralized-tdma", tdma_region_centralized(ch, powers)});
  out.regions.push_back({"centralized-fdma-inner", fdma_inner_bound_centralized(ch, powers, settings)});
  out.regions.push_back({"centralized-heuristic", pentagon_vertices(heuristic_twin_region(ch, powers))});
  return out;
}

SeedRegions bc_regions_for_seed(const ScenarioConfig& cfg, std::uint64_t seed) {
  const auto ch = draw(cfg, cfg.d2_m, seed);
  const auto downlink = cfg.downlink();
  const auto settings = settings_for(cfg, seed);
  SeedRegions out;
  out.seed = seed;
  out.regions.push_back({"no-irs", bc_capacity_region_distributed(without_irs(ch), downlink, settings)});
  if (cfg.sizes.total == 0) return out;

  out.regions.push_back({"distributed-capacity", bc_capacity_region_distributed(ch, downlink, settings)});
  out.regions.push_back({"distributed-tdma", bc_tdma_distributed(ch, downlink, settings)});
  out.regions.push_back({"distributed-fdma", bc_fdma_distributed(ch, downlink, settings)});

  const auto inits = twin_inits(ch);
  const auto points = bc_profile_points(ch, downlink, settings, inits);
  append_trace(out.trace, seed, "bc-profile", points);
  out.regions.push_back({"centralized-inner", profile_hull(points)});
  out.regions.push_back({"centralized-outer", bc_outer_bound_centralized(ch, downlink, settings)});
  out.regions.push_back({"centralized-tdma", bc_tdma_centralized(ch, downlink, settings)});
  out.regions.push_back({"centralized-fdma-inner", bc_fdma_inner_centralized(ch, downlink, settings)});
  out.regions.push_back(
      {"centralized-heuristic",
       union_of_pentagons(duality_power_splits(downlink, settings.power_grid),
                          [&](const PowerConfig& p) { return heuristic_twin_region(ch, p); })});
  return out;
}

std::vector<std::string> containment_failures(const SeedRegions& r, bool zero_direct) {
  std::vector<std::string> out;
  if (r.regions.size() == 1) return out;
  check(out, r, "distributed-capacity", "no-irs", kBoundTolerance);
  check(out, r, "distributed-fdma", "distributed-tdma", kOmaTolerance);
  check(out, r, "distributed-capacity", "distributed-fdma", kOmaTolerance);
  check(out, r, "centralized-outer", "centralized-inner", kBoundTolerance);
  check(out, r, "centralized-fdma-inner", "centralized-tdma", kBoundTolerance);
  check(out, r, "centralized-outer", "centralized-fdma-inner", kBoundTolerance);
  if (zero_direct) check(out, r, "centralized-inner", "distributed-capacity", kBoundTolerance);
  return out;
}

RegionBundle run_mac_regions(const ScenarioConfig& cfg, int threads) {
  if (cfg.kind != ExperimentKind::mac_regions) throw ConfigError("scenario kind is not mac-regions");
  return run_regions(cfg, threads, &mac_regions_for_seed);
}

RegionBundle run_bc_regions(const ScenarioConfig& cfg, int threads) {
  if (cfg.kind != ExperimentKind::bc_regions) throw ConfigError("scenario kind is not bc-regions");
  return run_regions(cfg, threads, &bc_regions_for_seed);
}

ElementSweepTable run_element_allocation_sweep(const ScenarioConfig& cfg, int threads) {
  cfg.validate();
  const auto m2s = cfg.m2_candidates();
  const auto powers = cfg.uplink();
  const int n_seeds = static_cast<int>(cfg.seeds.size());
  ElementSweepTable table;
  for (double d2 : cfg.sweep_d2_m) {
    std::vector<std::vector<double>> rates(n_seeds);
    parallel_for(n_seeds, threads, [&](int i) {
      const auto ch = draw(cfg, d2, cfg.seeds[i]);
      for (int m2 : m2s) rates[i].push_back(distributed_common_rate(ch, powers, m2));
    });
    int best = m2s.front();
    double best_mean = -1.0;
    for (std::size_t j = 0; j < m2s.size(); ++j) {
      double sum = 0.0;
      for (const auto& r : rates) sum += r[j];
      const double mean = sum / n_seeds;
      table.rows.push_back({d2, m2s[j], mean});
      if (mean > best_mean) {
        best_mean = mean;
        best = m2s[j];
      }
    }
    table.best_m2.emplace_back(d2, best);
  }
  return table;
}

CommonRateTable run_common_rate_sweep(const ScenarioConfig& cfg, int threads) {
  cfg.validate();
  const auto sweep = run_element_allocation_sweep(cfg, threads);
  const auto powers = cfg.uplink();
  const int n_seeds = static_cast<int>(cfg.seeds.size());
  CommonRateTable table;
  for (std::size_t di = 0; di < cfg.sweep_d2_m.size(); ++di) {
    const double d2 = cfg.sweep_d2_m[di];
    std::vector<double> centralized(n_seeds);
    std::vector<double> equal(n_seeds);
    parallel_for(n_seeds, threads, [&](int i) {
      const auto ch = draw(cfg, d2, cfg.seeds[i]);
      const auto settings = settings_for(cfg, cfg.seeds[i]);
      const auto inits = twin_inits(ch);
      centralized[i] = max_common_rate(inner_bound_region(ch, powers, settings, inits));
      equal[i] = distributed_common_rate(ch, powers, cfg.sizes.second);
    });
    CommonRateRow row;
    row.d2_m = d2;
    for (int i = 0; i < n_seeds; ++i) {
      row.centralized += centralized[i] / n_seeds;
      row.distributed_equal += equal[i] / n_seeds;
    }
    row.best_m2 = sweep.best_m2[di].second;
    for (const auto& r : sweep.rows) {
      if (r.d2_m == d2 && r.m2 == row.best_m2) row.distributed_best = r.mean_common_rate;
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<ValidationCheck> run_validation(const ScenarioConfig& cfg, int threads) {
  cfg.validate();
  if (cfg.sizes.total > kBruteForceMaxElements || cfg.sizes.total < 1) {
    throw ConfigError(fmt::format("validate needs 1 <= M <= {} (got M = {})", kBruteForceMaxElements,
                                  cfg.sizes.total));
  }
  const auto powers = cfg.uplink();
  const int n_seeds = static_cast<int>(cfg.seeds.size());
  std::vector<std::vector<ValidationCheck>> per_seed(n_seeds);
  parallel_for(n_seeds, threads, [&](int i) {
    const std::uint64_t seed = cfg.seeds[i];
    auto& out = per_seed[i];
    const auto add = [&](std::string name, double error, double tol) {
      out.push_back({seed, std::move(name), error, tol, error <= tol});
    };
    const auto ch = draw(cfg, cfg.d2_m, seed);
    const auto settings = settings_for(cfg, seed);
    const auto brute = brute_force_regions(ch, powers, settings.oracle_grid, settings.fdma_samples);

    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (int o = 0; o < 2; ++o) {
        const RateProfileProblem problem{a, o == 0 ? DecodingOrder::I : DecodingOrder::II};
        const auto ao = ao_sum_rate(ch, powers, problem, settings, derive_seed(settings.seed, 100 + 2 * o));
        const int first = problem.first_user();
        const double af = problem.alpha_first();
        double grid = 0.0;
        for (const auto& s : brute.frontier) {
          grid = std::max(grid, af >= 1.0 ? shannon_rate(s[first]) : profile_rate(s[first], s[1 - first], af));
        }
        add(fmt::format("ao-vs-grid alpha1={} order={}", a, o + 1), std::abs(ao.sum_rate - grid), 1e-3);
        double drop = 0.0;
        const auto& h = ao.state.beta_history;
        for (std::size_t j = 1; j < h.size(); ++j) drop = std::max(drop, h[j - 1] - h[j]);
        add(fmt::format("beta-monotone alpha1={} order={}", a, o + 1), drop, 1e-12);
      }
    }

    const auto dist = capacity_region_distributed(ch, powers);
    const auto dist_brute = brute_force_regions(embed_distributed_as_centralized(ch), powers,
                                                settings.oracle_grid, settings.fdma_samples);
    add("distributed-r1-cap", std::abs(dist.r1_cap - dist_brute.capacity.max_r1()), 1e-3);
    add("distributed-r2-cap", std::abs(dist.r2_cap - dist_brute.capacity.max_r2()), 1e-3);
    add("distributed-sum-cap", std::abs(dist.sum_cap - dist_brute.capacity.max_sum()), 1e-3);

    const double cap = sum_rate_upper_bound(ch, powers, settings.sdr_tol);
    add("sdr-above-grid-sum", std::max(0.0, brute.capacity.max_sum() - cap), 1e-9);
    const auto inner = inner_bound_region(ch, powers, settings);
    const auto outer = pentagon_vertices(outer_bound_region(ch, powers, cap));
    add("inner-in-outer", containment_excess(outer, inner), 1e-6);
    add("inner-in-grid-hull", containment_excess(brute.capacity, inner), 1e-3);
    add("tdma-in-fdma-distributed",
        containment_excess(fdma_region_distributed(ch, powers, settings.fdma_samples),
                           tdma_region_distributed(ch, powers)),
        1e-9);
  });
  std::vector<ValidationCheck> all;
  for (auto& v : per_seed) all.insert(all.end(), v.begin(), v.end());
  return all;
}

// ---------------------------------------------------------------------------

std::string bundle_json(const RegionBundle& bundle) {
  nlohmann::ordered_json doc;
  doc["kind"] = kind_name(bundle.kind);
  doc["units"] = "bps/Hz";
  auto& seeds = doc["seeds"] = nlohmann::ordered_json::array();
  for (const auto& s : bundle.seeds) {
    nlohmann::ordered_json entry;
    entry["seed"] = s.seed;
    auto& regions = entry["regions"] = nlohmann::ordered_json::object();
    for (const auto& r : s.regions) {
      auto verts = nlohmann::ordered_json::array();
      for (const auto& v : r.polygon.vertices()) verts.push_back({v.r1, v.r2});
      regions[r.name] = std::move(verts);
    }
    seeds.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string bundle_csv(const RegionBundle& bundle) {
  std::string out = "seed,region,vertex,r1,r2\n";
  for (const auto& s : bundle.seeds) {
    for (const auto& r : s.regions) {
      const auto& v = r.polygon.vertices();
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += fmt::format("{},{},{},{},{}\n", s.seed, r.name, i, csv_number(v[i].r1), csv_number(v[i].r2));
      }
    }
  }
  return out;
}

std::string bundle_trace_csv(const RegionBundle& bundle) {
  std::vector<TraceRow> rows;
  for (const auto& s : bundle.seeds) rows.insert(rows.end(), s.trace.begin(), s.trace.end());
  return trace_csv(rows);
}

std::string common_rate_csv(const CommonRateTable& table) {
  std::string out = "d2_m,centralized_inner,distributed_equal,distributed_best,best_m2,gap\n";
  for (const auto& r : table.rows) {
    out += fmt::format("{},{},{},{},{},{}\n", csv_number(r.d2_m), csv_number(r.centralized),
                       csv_number(r.distributed_equal), csv_number(r.distributed_best), r.best_m2,
                       csv_number(r.centralized - r.distributed_best));
  }
  return out;
}

std::string element_sweep_csv(const ElementSweepTable& table) {
  std::string out = "d2_m,m2,mean_common_rate\n";
  for (const auto& r : table.rows) {
    out += fmt::format("{},{},{}\n", csv_number(r.d2_m), r.m2, csv_number(r.mean_common_rate));
  }
  return out;
}

std::string element_sweep_best_csv(const ElementSweepTable& table) {
  std::string out = "d2_m,best_m2\n";
  for (const auto& [d2, m2] : table.best_m2) out += fmt::format("{},{}\n", csv_number(d2), m2);
  return out;
}

std::string validation_csv(const std::vector<ValidationCheck>& checks) {
  std::string out = "seed,check,error,tolerance,passed\n";
  for (const auto& c : checks) {
    out += fmt::format("{},\"{}\",{},{},{}\n", c.seed, c.name, csv_number(c.error), csv_number(c.tolerance),
                       c.passed ? 1 : 0);
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(fmt::format("cannot write {}", path.string()));
  f << text;
}

void write_bundle(const RegionBundle& bundle, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_text(out_dir / "regions.json", bundle_json(bundle));
  write_text(out_dir / "regions.csv", bundle_csv(bundle));
  write_text(out_dir / "trace.csv", bundle_trace_csv(bundle));
  const std::string prefix = bundle.kind == ExperimentKind::bc_regions ? "bc" : "mac";
  for (const auto& s : bundle.seeds) {
    PlotOptions opt;
    opt.title = fmt::format("{} regions, seed {}", prefix == "bc" ? "BC" : "MAC", s.seed);
    emit_plot(s.regions, out_dir / fmt::format("{}_seed_{}.svg", prefix, s.seed), opt);
  }
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads < 1) throw ConfigError("--threads must be >= 1");
  const int workers = std::min(threads, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace irs
