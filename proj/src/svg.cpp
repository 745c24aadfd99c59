#include "qgan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qgan {

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr int kPaletteSize = 10;

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 46.0;

std::string fmt(double value, const char* spec = "%.6g") {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

std::string escape_text(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range axis_range(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
  if (lo == hi) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - pad, hi + pad};
  }
  return {lo, hi};
}

void render_panel(std::string& out, const Chart& chart, double y_offset) {
  const ChartOptions& opt = chart.options;
  const double plot_x = kMarginLeft;
  const double plot_y = y_offset + kMarginTop;
  const double plot_w = opt.width - kMarginLeft - kMarginRight;
  const double plot_h = opt.height - kMarginTop - kMarginBottom;

  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool any = false;
  for (const Series& s : chart.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!any) {
        x_min = x_max = s.x[i];
        y_min = y_max = s.y[i];
        any = true;
      } else {
        x_min = std::min(x_min, s.x[i]);
        x_max = std::max(x_max, s.x[i]);
        y_min = std::min(y_min, s.y[i]);
        y_max = std::max(y_max, s.y[i]);
      }
    }
  }
  const Range xr = axis_range(x_min, x_max);
  const Range yr = axis_range(y_min, y_max);

  const auto to_px = [&](double x, double y) {
    const double px = plot_x + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    const double py = plot_y + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    return std::pair<double, double>{px, py};
  };

  out += "<g>\n";
  out += "<rect x=\"" + fmt(plot_x) + "\" y=\"" + fmt(plot_y) + "\" width=\"" +
         fmt(plot_w) + "\" height=\"" + fmt(plot_h) +
         "\" fill=\"white\" stroke=\"#333333\"/>\n";

  if (!opt.title.empty()) {
    out += "<text x=\"" + fmt(plot_x + plot_w / 2.0) + "\" y=\"" +
           fmt(y_offset + 20.0) +
           "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">" +
           escape_text(opt.title) + "</text>\n";
  }

  const int n_ticks = 5;
  for (int t = 0; t < n_ticks; ++t) {
    const double frac = static_cast<double>(t) / (n_ticks - 1);
    const double xv = xr.lo + frac * (xr.hi - xr.lo);
    const double yv = yr.lo + frac * (yr.hi - yr.lo);
    const double tx = plot_x + frac * plot_w;
    const double ty = plot_y + plot_h - frac * plot_h;
    out += "<line x1=\"" + fmt(tx) + "\" y1=\"" + fmt(plot_y + plot_h) +
           "\" x2=\"" + fmt(tx) + "\" y2=\"" + fmt(plot_y + plot_h + 4.0) +
           "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + fmt(tx) + "\" y=\"" + fmt(plot_y + plot_h + 16.0) +
           "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" +
           fmt(xv, "%.4g") + "</text>\n";
    out += "<line x1=\"" + fmt(plot_x - 4.0) + "\" y1=\"" + fmt(ty) +
           "\" x2=\"" + fmt(plot_x) + "\" y2=\"" + fmt(ty) +
           "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + fmt(plot_x - 6.0) + "\" y=\"" + fmt(ty + 3.0) +
           "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" +
           fmt(yv, "%.4g") + "</text>\n";
  }

  if (!opt.x_label.empty()) {
    out += "<text x=\"" + fmt(plot_x + plot_w / 2.0) + "\" y=\"" +
           fmt(plot_y + plot_h + 34.0) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" +
           escape_text(opt.x_label) + "</text>\n";
  }
  if (!opt.y_label.empty()) {
    const double lx = y_offset + kMarginTop + plot_h / 2.0;
    out += "<text x=\"14\" y=\"" + fmt(lx) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 14 " + fmt(lx) + ")\">" +
           escape_text(opt.y_label) + "</text>\n";
  }

  int color_index = 0;
  for (const Series& s : chart.series) {
    const std::string color =
        s.color.empty() ? kPalette[color_index % kPaletteSize] : s.color;
    ++color_index;
    std::string points;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      const auto [px, py] = to_px(s.x[i], s.y[i]);
      points += fmt(px, "%.2f");
      points += ",";
      points += fmt(py, "%.2f");
      points += " ";
    }
    if (!points.empty()) points.pop_back();
    out += "<polyline fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  }

  if (opt.legend) {
    double ly = plot_y + 12.0;
    color_index = 0;
    for (const Series& s : chart.series) {
      const std::string color =
          s.color.empty() ? kPalette[color_index % kPaletteSize] : s.color;
      ++color_index;
      if (s.label.empty()) continue;
      const double lx = plot_x + plot_w - 120.0;
      out += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 3.0) + "\" x2=\"" +
             fmt(lx + 18.0) + "\" y2=\"" + fmt(ly - 3.0) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
      out += "<text x=\"" + fmt(lx + 24.0) + "\" y=\"" + fmt(ly) +
             "\" font-size=\"10\" font-family=\"sans-serif\">" +
             escape_text(s.label) + "</text>\n";
      ly += 14.0;
    }
  }
  out += "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<Chart>& panels) {
  if (panels.empty()) {
    throw std::invalid_argument("render_svg needs at least one panel");
  }
  int width = 0;
  int height = 0;
  for (const Chart& chart : panels) {
    width = std::max(width, chart.options.width);
    height += chart.options.height;
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double y_offset = 0.0;
  for (const Chart& chart : panels) {
    render_panel(out, chart, y_offset);
    y_offset += chart.options.height;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qgan
