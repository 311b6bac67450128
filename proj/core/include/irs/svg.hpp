#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "irs/experiment.hpp"

namespace irs {

struct PlotOptions {
  std::string title;
  int width = 640;
  int height = 480;
};

/// SVG 1.1 document with R1/R2 axes in bps/Hz, one closed polyline per
/// region and a legend. Output depends only on the inputs.
std::string render_plot(std::span<const NamedRegion> regions, const PlotOptions& options = {});

void emit_plot(std::span<const NamedRegion> regions, const std::filesystem::path& path,
               const PlotOptions& options = {});

}  // namespace irs
