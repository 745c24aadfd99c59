#pragma once

#include <string>
#include <vector>

namespace qgan {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;  // empty = pick from the default palette
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 340;
  bool legend = true;
};

struct Chart {
  ChartOptions options;
  std::vector<Series> series;
};

/// Renders panels stacked vertically into one standalone SVG document.
/// Output is deterministic for identical inputs.
std::string render_svg(const std::vector<Chart>& panels);

}  // namespace qgan
