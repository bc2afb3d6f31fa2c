#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "varden/model.hpp"

namespace varden {

// Cluster c is drawn in kClusterPalette[c % 12]; noise in kNoiseColor.
inline constexpr std::array<std::string_view, 12> kClusterPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31",
};
inline constexpr std::string_view kNoiseColor = "#9e9e9e";

// Standalone 2-D scatter plot. Core points get the full marker radius, border
// points 70% of it. The viewBox wraps the data with a 5% margin and leaves a
// legend column on the right listing each cluster's size and the noise count.
std::string format_svg(const Dataset& d, const Labeling& labeling);
void render_svg(const Dataset& d, const Labeling& labeling, const std::filesystem::path& path);
void render_svg(const Dataset& d, const AdaptiveResult& result, const std::filesystem::path& path);

}  // namespace varden
