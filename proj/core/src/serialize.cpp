#include "irs/serialize.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "irs/errors.hpp"

namespace irs {

using nlohmann::json;

namespace {

json complex_array(const ComplexVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

ComplexVector read_complex_array(const json& a, const char* what) {
  if (!a.is_array()) throw ConfigError(fmt::format("{} must be an array of [re, im] pairs", what));
  ComplexVector out;
  out.reserve(a.size());
  for (const auto& pair : a) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ConfigError(fmt::format("{} entries must be [re, im] pairs", what));
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

json position(const Position& p) { return {p.x, p.y, p.z}; }

}  // namespace

std::string channel_to_json(const ChannelRealization& ch, std::uint64_t seed,
                            const std::optional<GeometryConfig>& geometry) {
  json doc;
  doc["schema_version"] = 1;
  doc["seed"] = seed;
  doc["sizes"] = {{"M", ch.sizes.total}, {"M1", ch.sizes.first}, {"M2", ch.sizes.second}};
  doc["direct"] = complex_array(ComplexVector{ch.direct[0], ch.direct[1]});
  doc["dist_user_to_irs"] = {complex_array(ch.dist_user_to_irs[0]), complex_array(ch.dist_user_to_irs[1])};
  doc["dist_irs_to_ap"] = {complex_array(ch.dist_irs_to_ap[0]), complex_array(ch.dist_irs_to_ap[1])};
  doc["cent_user_to_irs"] = {complex_array(ch.cent_user_to_irs[0]), complex_array(ch.cent_user_to_irs[1])};
  doc["cent_irs_to_ap"] = complex_array(ch.cent_irs_to_ap);
  if (geometry) {
    const auto& g = *geometry;
    doc["geometry"] = {{"ap", position(g.ap)},
                       {"users", {position(g.users[0]), position(g.users[1])}},
                       {"central_irs", position(g.central_irs)},
                       {"distributed_irs", {position(g.distributed_irs[0]), position(g.distributed_irs[1])}},
                       {"gamma0", g.gamma0},
                       {"exponent_direct", g.exponent_direct},
                       {"exponent_reflected", g.exponent_reflected}};
  }
  return doc.dump(2);
}

ChannelRealization channel_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("channel JSON does not parse: {}", e.what()));
  }
  try {
    ChannelRealization ch;
    const auto& s = doc.at("sizes");
    ch.sizes = {s.at("M").get<int>(), s.at("M1").get<int>(), s.at("M2").get<int>()};
    const auto direct = read_complex_array(doc.at("direct"), "direct");
    if (direct.size() != 2) throw ConfigError("direct must hold two coefficients");
    ch.direct = {direct[0], direct[1]};
    for (int k = 0; k < 2; ++k) {
      ch.dist_user_to_irs[k] = read_complex_array(doc.at("dist_user_to_irs").at(k), "dist_user_to_irs");
      ch.dist_irs_to_ap[k] = read_complex_array(doc.at("dist_irs_to_ap").at(k), "dist_irs_to_ap");
      ch.cent_user_to_irs[k] = read_complex_array(doc.at("cent_user_to_irs").at(k), "cent_user_to_irs");
    }
    ch.cent_irs_to_ap = read_complex_array(doc.at("cent_irs_to_ap"), "cent_irs_to_ap");
    ch.validate();
    return ch;
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("channel JSON is malformed: {}", e.what()));
  }
}

std::string polygon_to_json(const RatePolygon& polygon) {
  json a = json::array();
  for (const auto& v : polygon.vertices()) a.push_back({v.r1, v.r2});
  return a.dump();
}

std::string csv_number(double v) { return fmt::format("{:.9g}", v); }

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::string out = "seed,problem,alpha1,order,iteration,value\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", r.seed, r.problem, csv_number(r.alpha1), r.order, r.iteration,
                       csv_number(r.value));
  }
  return out;
}

}  // namespace irs
