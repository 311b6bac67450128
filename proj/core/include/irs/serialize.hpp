#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irs/channel.hpp"
#include "irs/region.hpp"

namespace irs {

/// JSON document with sizes, seed, optional geometry echo, and every link as
/// an array of [re, im] pairs. Doubles are written with round-trip precision.
std::string channel_to_json(const ChannelRealization& ch, std::uint64_t seed,
                            const std::optional<GeometryConfig>& geometry = std::nullopt);

/// Inverse of channel_to_json. Throws ConfigError on malformed input.
ChannelRealization channel_from_json(const std::string& text);

/// Vertex array [[r1, r2], ...] as JSON text.
std::string polygon_to_json(const RatePolygon& polygon);

/// One row of an optimizer trace.
struct TraceRow {
  std::uint64_t seed = 0;
  std::string problem;   // e.g. "mac-profile", "bc-profile", "mac-fdma"
  double alpha1 = 0.0;
  int order = 0;         // 1 or 2; 0 when not applicable
  int iteration = 0;
  double value = 0.0;    // beta for SIC profiles, sum rate for FDMA
};

/// CSV with header seed,problem,alpha1,order,iteration,value.
std::string trace_csv(const std::vector<TraceRow>& rows);

/// 9-significant-digit formatting used by every CSV writer.
std::string csv_number(double v);

}  // namespace irs
