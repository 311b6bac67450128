#include "irs/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "irs/errors.hpp"

namespace irs {

using nlohmann::json;

std::string kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::mac_regions: return "mac-regions";
    case ExperimentKind::bc_regions: return "bc-regions";
    case ExperimentKind::common_rate_sweep: return "common-rate";
    case ExperimentKind::element_allocation_sweep: return "element-sweep";
  }
  return "unknown";
}

GeometryConfig ScenarioConfig::geometry(double d2) const {
  GeometryConfig g = GeometryConfig::preset(d1_m, d2);
  g.gamma0 = db_to_linear(gamma0_db);
  g.exponent_direct = exponent_direct;
  g.exponent_reflected = exponent_reflected;
  return g;
}

PowerConfig ScenarioConfig::uplink() const {
  return PowerConfig::uplink(db_to_linear(user1_snr_db), db_to_linear(user2_snr_db), 1.0);
}

PowerConfig ScenarioConfig::downlink() const { return PowerConfig::downlink(db_to_linear(ap_snr_db), 1.0); }

std::vector<int> ScenarioConfig::m2_candidates() const {
  if (!sweep_m2.empty()) return sweep_m2;
  std::vector<int> out;
  for (int m2 = 1; m2 < sizes.total; ++m2) out.push_back(m2);
  return out;
}

void ScenarioConfig::validate() const {
  sizes.validate();
  solver.validate();
  if (seeds.empty()) throw ConfigError("seed list must not be empty");
  if (!(d1_m > 0.0) || !(d2_m > 0.0)) throw ConfigError("user distances must be positive");
  for (double v : {gamma0_db, user1_snr_db, user2_snr_db, ap_snr_db}) {
    if (!std::isfinite(v)) throw ConfigError("dB quantities must be finite");
  }
  geometry().validate();
  const bool sweep = kind == ExperimentKind::common_rate_sweep || kind == ExperimentKind::element_allocation_sweep;
  if (sweep) {
    if (sweep_d2_m.empty()) throw ConfigError("sweeps need a non-empty sweep.d2_m list");
    for (double d : sweep_d2_m) {
      if (!(d > 0.0)) throw ConfigError("sweep distances must be positive");
    }
    if (sizes.total < 2) throw ConfigError("sweeps need M >= 2");
    for (int m2 : m2_candidates()) {
      if (m2 < 1 || m2 >= sizes.total) {
        throw ConfigError(fmt::format("sweep.m2 value {} outside [1, M-1]", m2));
      }
    }
  }
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  if (!obj.is_object()) throw ConfigError(fmt::format("{} must be an object", where));
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

template <class T>
void read(const json& obj, const char* key, T& into) {
  if (obj.contains(key)) into = obj.at(key).get<T>();
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("scenario does not parse: {}", e.what()));
  }
  ScenarioConfig cfg;
  try {
    reject_unknown(doc, {"schema_version", "kind", "geometry", "sizes", "powers", "solver", "seeds",
                         "zero_direct", "sweep", "description"},
                   "scenario");
    const int version = doc.at("schema_version").get<int>();
    if (version != kScenarioSchemaVersion) {
      throw ConfigError(fmt::format("unsupported schema_version {} (expected {})", version,
                                    kScenarioSchemaVersion));
    }
    const auto kind = doc.at("kind").get<std::string>();
    bool matched = false;
    for (auto k : {ExperimentKind::mac_regions, ExperimentKind::bc_regions, ExperimentKind::common_rate_sweep,
                   ExperimentKind::element_allocation_sweep}) {
      if (kind == kind_name(k)) {
        cfg.kind = k;
        matched = true;
      }
    }
    if (!matched) throw ConfigError(fmt::format("unknown experiment kind '{}'", kind));

    if (doc.contains("geometry")) {
      const auto& g = doc["geometry"];
      reject_unknown(g, {"d1_m", "d2_m", "gamma0_db", "exponent_direct", "exponent_reflected"}, "geometry");
      read(g, "d1_m", cfg.d1_m);
      read(g, "d2_m", cfg.d2_m);
      read(g, "gamma0_db", cfg.gamma0_db);
      read(g, "exponent_direct", cfg.exponent_direct);
      read(g, "exponent_reflected", cfg.exponent_reflected);
    }
    if (doc.contains("sizes")) {
      const auto& s = doc["sizes"];
      reject_unknown(s, {"M", "M1", "M2"}, "sizes");
      read(s, "M", cfg.sizes.total);
      if (s.contains("M1") || s.contains("M2")) {
        read(s, "M1", cfg.sizes.first);
        read(s, "M2", cfg.sizes.second);
      } else {
        cfg.sizes = ArraySizes::even_split(cfg.sizes.total);
        if (cfg.sizes.total == 0) cfg.sizes = {0, 0, 0};
      }
    }
    if (doc.contains("powers")) {
      const auto& p = doc["powers"];
      reject_unknown(p, {"user1_snr_db", "user2_snr_db", "ap_snr_db"}, "powers");
      read(p, "user1_snr_db", cfg.user1_snr_db);
      read(p, "user2_snr_db", cfg.user2_snr_db);
      read(p, "ap_snr_db", cfg.ap_snr_db);
    }
    if (doc.contains("solver")) {
      const auto& s = doc["solver"];
      reject_unknown(s, {"L", "L_P", "L_0", "Q", "ao_starts", "max_sweeps", "convergence_tol", "fdma_samples", "sdr_tol"},
                     "solver");
      read(s, "L", cfg.solver.rate_grid);
      read(s, "L_P", cfg.solver.power_grid);
      read(s, "L_0", cfg.solver.oracle_grid);
      read(s, "Q", cfg.solver.random_inits);
      read(s, "ao_starts", cfg.solver.ao_starts);
      read(s, "max_sweeps", cfg.solver.max_sweeps);
      read(s, "convergence_tol", cfg.solver.convergence_tol);
      read(s, "fdma_samples", cfg.solver.fdma_samples);
      read(s, "sdr_tol", cfg.solver.sdr_tol);
    }
    if (doc.contains("seeds")) {
      const auto& s = doc["seeds"];
      if (s.is_array()) {
        for (const auto& v : s) cfg.seeds.push_back(v.get<std::uint64_t>());
      } else {
        reject_unknown(s, {"base", "count"}, "seeds");
        const auto base = s.value("base", std::uint64_t{1});
        const int count = s.value("count", 100);
        if (count < 1) throw ConfigError("seeds.count must be >= 1");
        for (int i = 0; i < count; ++i) cfg.seeds.push_back(base + static_cast<std::uint64_t>(i));
      }
    } else {
      for (std::uint64_t i = 1; i <= 100; ++i) cfg.seeds.push_back(i);
    }
    read(doc, "zero_direct", cfg.zero_direct);
    if (doc.contains("sweep")) {
      const auto& s = doc["sweep"];
      reject_unknown(s, {"d2_m", "m2"}, "sweep");
      read(s, "d2_m", cfg.sweep_d2_m);
      read(s, "m2", cfg.sweep_m2);
    }
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("scenario is malformed: {}", e.what()));
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open scenario file {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

void override_seed_count(ScenarioConfig& cfg, int count) {
  if (count < 1) throw ConfigError("--seeds must be >= 1");
  const std::uint64_t base = cfg.seeds.empty() ? 1 : cfg.seeds.front();
  cfg.seeds.clear();
  for (int i = 0; i < count; ++i) cfg.seeds.push_back(base + static_cast<std::uint64_t>(i));
}

}  // namespace irs
