#include "irs/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace irs {

namespace {

struct Style {
  const char* color;
  const char* dash;   // empty: solid
};

constexpr std::array<Style, 10> kStyles{{
    {"#000000", "2,3"},
    {"#1f77b4", ""},
    {"#1f77b4", "6,3"},
    {"#1f77b4", "1,2"},
    {"#d62728", ""},
    {"#d62728", "8,3,2,3"},
    {"#2ca02c", "6,3"},
    {"#2ca02c", "1,2"},
    {"#9467bd", "4,2"},
    {"#ff7f0e", ""},
}};

/// 1, 2 or 5 times a power of ten, giving roughly five ticks over `span`.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0}) {
    if (f * mag >= raw) return f * mag;
  }
  return 10.0 * mag;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_plot(std::span<const NamedRegion> regions, const PlotOptions& options) {
  const double w = options.width;
  const double h = options.height;
  const double left = 60, right = 170, top = 30, bottom = 50;
  const double pw = w - left - right;
  const double ph = h - top - bottom;

  double xmax = 0.0;
  double ymax = 0.0;
  for (const auto& r : regions) {
    xmax = std::max(xmax, r.polygon.max_r1());
    ymax = std::max(ymax, r.polygon.max_r2());
  }
  const double xstep = tick_step(xmax > 0.0 ? xmax : 1.0);
  const double ystep = tick_step(ymax > 0.0 ? ymax : 1.0);
  xmax = std::max(1.0, std::ceil(xmax / xstep - 1e-9)) * xstep;
  ymax = std::max(1.0, std::ceil(ymax / ystep - 1e-9)) * ystep;
  const auto sx = [&](double x) { return left + pw * x / xmax; };
  const auto sy = [&](double y) { return top + ph * (1.0 - y / ymax); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      options.width, options.height, options.width, options.height);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", options.width,
                     options.height);
  if (!options.title.empty()) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       left + pw / 2, escape(options.title));
  }

  out += "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", sx(0), sy(0), sx(xmax),
                     sy(0));
  out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", sx(0), sy(0), sx(0),
                     sy(ymax));
  const int nx = static_cast<int>(std::lround(xmax / xstep));
  const int ny = static_cast<int>(std::lround(ymax / ystep));
  for (int i = 0; i <= nx; ++i) {
    const double x = sx(i * xstep);
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x, sy(0), x, sy(0) + 5);
  }
  for (int i = 0; i <= ny; ++i) {
    const double y = sy(i * ystep);
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", sx(0) - 5, y, sx(0), y);
  }
  out += "</g>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  for (int i = 0; i <= nx; ++i) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:g}</text>\n", sx(i * xstep),
                       sy(0) + 18, i * xstep);
  }
  for (int i = 0; i <= ny; ++i) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:g}</text>\n", sx(0) - 8,
                       sy(i * ystep) + 4, i * ystep);
  }
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">R1 (bps/Hz)</text>\n", left + pw / 2,
                     h - 10);
  out += fmt::format("<text x=\"15\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 15 {:.2f})\">"
                     "R2 (bps/Hz)</text>\n",
                     top + ph / 2, top + ph / 2);
  out += "</g>\n";

  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& style = kStyles[i % kStyles.size()];
    std::string points;
    for (const auto& v : regions[i].polygon.vertices()) {
      if (!points.empty()) points += ' ';
      points += fmt::format("{:.2f},{:.2f}", sx(v.r1), sy(v.r2));
    }
    const std::string dash = *style.dash ? fmt::format(" stroke-dasharray=\"{}\"", style.dash) : "";
    out += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n", points,
                       style.color, dash);
  }

  const double lx = left + pw + 15;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& style = kStyles[i % kStyles.size()];
    const double ly = top + 10 + 18.0 * static_cast<double>(i);
    const std::string dash = *style.dash ? fmt::format(" stroke-dasharray=\"{}\"", style.dash) : "";
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
                       "stroke-width=\"1.5\"{}/>\n",
                       lx, ly, lx + 24, ly, style.color, dash);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                       lx + 30, ly + 4, escape(regions[i].name));
  }
  out += "</svg>\n";
  return out;
}

void emit_plot(std::span<const NamedRegion> regions, const std::filesystem::path& path,
               const PlotOptions& options) {
  write_text(path, render_plot(regions, options));
}

}  // namespace irs
