#include "ptlat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ptlat {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                         "#9467bd", "#ff7f0e", "#8c564b"};

std::string esc(const std::string& s) {
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

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void grow(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void finish() {
    if (lo > hi) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      double pad = std::max(1.0, std::abs(lo) * 0.5);
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string render_scatter_svg(const std::vector<PlotSeries>& series,
                               const std::string& title,
                               const std::string& x_label,
                               const std::string& y_label) {
  const double width = 760, height = 520;
  const double left = 70, right = 740, top = 40, bottom = 465;

  Range rx, ry;
  for (const auto& s : series) {
    for (double v : s.x) rx.grow(v);
    for (double v : s.y) ry.grow(v);
  }
  rx.finish();
  ry.finish();
  const double pad_x = 0.05 * (rx.hi - rx.lo);
  const double pad_y = 0.05 * (ry.hi - ry.lo);
  const double x0 = rx.lo - pad_x, x1 = rx.hi + pad_x;
  const double y0 = ry.lo - pad_y, y1 = ry.hi + pad_y;

  auto px = [&](double x) {
    return left + (x - x0) / (x1 - x0) * (right - left);
  };
  auto py = [&](double y) {
    return bottom - (y - y0) / (y1 - y0) * (bottom - top);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << " " << height << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Grid and ticks: five even divisions of the data range.
  svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
  for (int k = 0; k <= 4; ++k) {
    double fx = rx.lo + (rx.hi - rx.lo) * k / 4.0;
    double gx = px(fx);
    svg << "<line x1=\"" << num(gx) << "\" y1=\"" << num(top) << "\" x2=\""
        << num(gx) << "\" y2=\"" << num(bottom)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num(gx) << "\" y1=\"" << num(bottom) << "\" x2=\""
        << num(gx) << "\" y2=\"" << num(bottom + 5)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(gx) << "\" y=\"" << num(bottom + 20)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";

    double fy = ry.lo + (ry.hi - ry.lo) * k / 4.0;
    double gy = py(fy);
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(gy) << "\" x2=\""
        << num(right) << "\" y2=\"" << num(gy)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(gy)
        << "\" x2=\"" << num(left) << "\" y2=\"" << num(gy)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(left - 8) << "\" y=\"" << num(gy + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(right - left) << "\" height=\"" << num(bottom - top)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    svg << "<g fill=\"" << color << "\" fill-opacity=\"0.85\">\n";
    const auto& s = series[si];
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      svg << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\""
          << num(py(s.y[i])) << "\" r=\"2\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#000\">\n";
  if (!title.empty()) {
    svg << "<text x=\"" << num((left + right) / 2) << "\" y=\"24\" "
        << "text-anchor=\"middle\" font-size=\"16\">" << esc(title)
        << "</text>\n";
  }
  if (!x_label.empty()) {
    svg << "<text x=\"" << num((left + right) / 2) << "\" y=\""
        << num(height - 12) << "\" text-anchor=\"middle\">" << esc(x_label)
        << "</text>\n";
  }
  if (!y_label.empty()) {
    svg << "<text x=\"18\" y=\"" << num((top + bottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num((top + bottom) / 2) << ")\">" << esc(y_label) << "</text>\n";
  }
  for (size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    double ly = top + 16 + 18 * static_cast<double>(si);
    svg << "<rect x=\"" << num(right - 130) << "\" y=\"" << num(ly - 9)
        << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << num(right - 114) << "\" y=\"" << num(ly) << "\">"
        << esc(series[si].label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace ptlat
