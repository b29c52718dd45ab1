#pragma once

#include <string>
#include <vector>

namespace ptlat {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Standalone SVG 1.1 scatter chart: one colored point cloud per series,
// framed axes with ticks, optional title and a legend.
std::string render_scatter_svg(const std::vector<PlotSeries>& series,
                               const std::string& title,
                               const std::string& x_label,
                               const std::string& y_label);

}  // namespace ptlat
