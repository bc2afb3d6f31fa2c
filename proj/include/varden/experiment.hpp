#pragma once

#include <cstddef>
#include <filesystem>

#include "varden/metrics.hpp"
#include "varden/model.hpp"
#include "varden/synthgen.hpp"

namespace varden {

inline constexpr double kTuneEpsStep = 0.01;
inline constexpr double kTuneBlobCoverage = 0.90;

// Smallest eps on the grid kTuneEpsStep * j (j = 1, 2, ...) at which a single
// DBSCAN cluster holds at least kTuneBlobCoverage of the points whose truth
// label is `blob`. Falls back to the dataset diameter if no grid value works.
double tune_eps_for_blob(const Dataset& d, int blob, std::size_t min_pts);

struct CompareOutcome {
  ScenarioSpec spec;
  Dataset data;
  DbscanParams dbscan_params;
  Labeling dbscan;
  EvalReport dbscan_report;
  AdbscanParams adbscan_params;
  AdaptiveResult adbscan;
  EvalReport adbscan_report;
};

// Fixed-eps DBSCAN (eps tuned to the densest blob, min_pts 10) against
// ADBSCAN with default parameters and k = number of blobs, on one scenario.
CompareOutcome run_compare(const ScenarioSpec& spec);

// Writes data.csv, dbscan.csv, dbscan.svg, dbscan_manifest.txt, adbscan.csv,
// adbscan.svg, adbscan_manifest.txt and summary.csv into dir.
void write_compare_outputs(const CompareOutcome& outcome, std::string_view scenario_name,
                           const std::filesystem::path& dir);

}  // namespace varden
