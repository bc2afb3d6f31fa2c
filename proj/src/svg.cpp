#include "varden/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "varden/csv_io.hpp"
#include "varden/error.hpp"

namespace varden {

namespace {

constexpr double kPlotExtent = 1000.0;  // pixels along the longer data axis
constexpr double kMarkerRadius = 4.0;
constexpr double kLegendWidth = 220.0;
constexpr double kLegendRow = 22.0;

// Fixed-point so the bytes never depend on shortest-repr heuristics.
std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string format_svg(const Dataset& d, const Labeling& labeling) {
  if (d.dimension() != 2) {
    throw Error(Errc::UnsupportedDimension, "SVG rendering needs 2-D points, got " + std::to_string(d.dimension()));
  }
  if (labeling.size() != d.size() || labeling.point_class.size() != d.size()) {
    throw Error(Errc::LengthMismatch, "labeling does not cover the dataset");
  }

  double x_min = d.points.front()[0], x_max = x_min;
  double y_min = d.points.front()[1], y_max = y_min;
  for (const Point& p : d.points) {
    x_min = std::min(x_min, p[0]);
    x_max = std::max(x_max, p[0]);
    y_min = std::min(y_min, p[1]);
    y_max = std::max(y_max, p[1]);
  }
  double span = std::max(x_max - x_min, y_max - y_min);
  if (span <= 0.0) span = 1.0;
  const double scale = kPlotExtent / span;
  const double width = (x_max - x_min) * scale;
  const double height = (y_max - y_min) * scale;
  const double margin_x = 0.05 * std::max(width, kPlotExtent * 0.05);
  const double margin_y = 0.05 * std::max(height, kPlotExtent * 0.05);

  const double view_x = -margin_x;
  const double view_y = -margin_y;
  const double view_w = width + 2.0 * margin_x + kLegendWidth;
  const double legend_rows = static_cast<double>(labeling.num_clusters + 1);
  const double view_h = std::max(height + 2.0 * margin_y, legend_rows * kLegendRow + 2.0 * kLegendRow);

  std::vector<std::size_t> sizes(labeling.num_clusters, 0);
  std::size_t noise = 0;
  for (int id : labeling.assignment) {
    if (id == kNoise) {
      ++noise;
    } else {
      ++sizes[static_cast<std::size_t>(id)];
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + px(view_x) + ' ' + px(view_y) + ' ' + px(view_w) +
         ' ' + px(view_h) + "\" width=\"" + px(view_w) + "\" height=\"" + px(view_h) + "\">\n";
  out += "<rect x=\"" + px(view_x) + "\" y=\"" + px(view_y) + "\" width=\"" + px(view_w) + "\" height=\"" +
         px(view_h) + "\" fill=\"#ffffff\"/>\n";

  // Noise first so cluster markers stay on top.
  out += "<g id=\"points\" stroke=\"none\">\n";
  for (int pass = 0; pass < 2; ++pass) {
    for (PointId i = 0; i < d.size(); ++i) {
      const int id = labeling.assignment[i];
      if ((id == kNoise) != (pass == 0)) continue;
      const double cx = (d.points[i][0] - x_min) * scale;
      const double cy = (y_max - d.points[i][1]) * scale;
      const double r = labeling.point_class[i] == PointClass::Border ? 0.7 * kMarkerRadius : kMarkerRadius;
      const std::string_view fill =
          id == kNoise ? kNoiseColor : kClusterPalette[static_cast<std::size_t>(id) % kClusterPalette.size()];
      out += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(r) + "\" fill=\"" + std::string(fill) +
             "\"/>\n";
    }
  }
  out += "</g>\n";

  const double legend_x = width + margin_x + 20.0;
  out += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
  auto legend_row = [&](std::size_t row, std::string_view color, const std::string& label) {
    const double y = view_y + kLegendRow * static_cast<double>(row + 1);
    out += "<circle cx=\"" + px(legend_x) + "\" cy=\"" + px(y) + "\" r=\"" + px(kMarkerRadius * 1.5) + "\" fill=\"" +
           std::string(color) + "\"/>\n";
    out += "<text x=\"" + px(legend_x + 12.0) + "\" y=\"" + px(y + 5.0) + "\">" + label + "</text>\n";
  };
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    legend_row(c, kClusterPalette[c % kClusterPalette.size()],
               "cluster " + std::to_string(c) + " (" + std::to_string(sizes[c]) + ")");
  }
  legend_row(sizes.size(), kNoiseColor, "noise (" + std::to_string(noise) + ")");
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

void render_svg(const Dataset& d, const Labeling& labeling, const std::filesystem::path& path) {
  write_text_file(path, format_svg(d, labeling));
}

void render_svg(const Dataset& d, const AdaptiveResult& result, const std::filesystem::path& path) {
  render_svg(d, result.to_labeling(), path);
}

}  // namespace varden
