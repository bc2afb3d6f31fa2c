#include "varden/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "varden/adbscan.hpp"
#include "varden/csv_io.hpp"
#include "varden/dbscan.hpp"
#include "varden/error.hpp"
#include "varden/manifest.hpp"
#include "varden/neighborhood.hpp"
#include "varden/svg.hpp"

namespace varden {

namespace {

constexpr std::size_t kDbscanMinPts = 10;

bool blob_forms_one_cluster(const Labeling& labeling, const std::vector<PointId>& members) {
  std::map<int, std::size_t> counts;
  for (PointId id : members) {
    if (labeling.assignment[id] != kNoise) ++counts[labeling.assignment[id]];
  }
  std::size_t best = 0;
  for (const auto& [id, count] : counts) best = std::max(best, count);
  return static_cast<double>(best) >= kTuneBlobCoverage * static_cast<double>(members.size());
}

}  // namespace

double tune_eps_for_blob(const Dataset& d, int blob, std::size_t min_pts) {
  validate_dataset(d);
  if (!d.truth) throw Error(Errc::MissingGroundTruth, "eps tuning needs ground-truth labels");
  std::vector<PointId> members;
  for (PointId i = 0; i < d.size(); ++i) {
    if ((*d.truth)[i] == blob) members.push_back(i);
  }
  if (members.empty()) throw Error(Errc::InvalidParams, "no points carry truth label " + std::to_string(blob));

  const NeighborIndex ix(d);
  const double diameter = dataset_diameter(d);
  for (std::size_t j = 1;; ++j) {
    const double eps = static_cast<double>(j) * kTuneEpsStep;
    if (eps > diameter) break;
    if (blob_forms_one_cluster(run_dbscan(ix, {eps, min_pts}), members)) return eps;
  }
  return diameter > 0.0 ? diameter : kTuneEpsStep;
}

CompareOutcome run_compare(const ScenarioSpec& spec) {
  CompareOutcome out;
  out.spec = spec;
  out.data = gen_scenario(spec);

  const int dense = static_cast<int>(densest_blob(spec));
  out.dbscan_params = {tune_eps_for_blob(out.data, dense, kDbscanMinPts), kDbscanMinPts};
  out.dbscan = run_dbscan(out.data, out.dbscan_params);
  out.dbscan_report = evaluate(out.data, out.dbscan);

  out.adbscan_params.k = spec.blobs.size();
  out.adbscan = run_adbscan(out.data, out.adbscan_params);
  out.adbscan_report = evaluate(out.data, out.adbscan);
  return out;
}

void write_compare_outputs(const CompareOutcome& outcome, std::string_view scenario_name,
                           const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create '" + dir.string() + "': " + ec.message());

  const std::uint64_t hash = dataset_hash(outcome.data);
  write_dataset_csv(outcome.data, dir / "data.csv");

  write_csv(outcome.data, outcome.dbscan, dir / "dbscan.csv");
  render_svg(outcome.data, outcome.dbscan, dir / "dbscan.svg");
  RunManifest dbscan_manifest;
  dbscan_manifest.command = "compare/dbscan";
  dbscan_manifest.params = param_record(outcome.dbscan_params);
  dbscan_manifest.params["scenario"] = std::string(scenario_name);
  dbscan_manifest.params["seed"] = std::to_string(outcome.spec.seed);
  dbscan_manifest.params["eps_tuning"] = "densest_blob";
  dbscan_manifest.dataset_hash = hash;
  dbscan_manifest.report = outcome.dbscan_report;
  write_text_file(dir / "dbscan_manifest.txt", format_manifest(dbscan_manifest));

  write_csv(outcome.data, outcome.adbscan, dir / "adbscan.csv");
  render_svg(outcome.data, outcome.adbscan, dir / "adbscan.svg");
  RunManifest adbscan_manifest;
  adbscan_manifest.command = "compare/adbscan";
  adbscan_manifest.params = param_record(outcome.adbscan_params);
  adbscan_manifest.params["scenario"] = std::string(scenario_name);
  adbscan_manifest.params["seed"] = std::to_string(outcome.spec.seed);
  adbscan_manifest.dataset_hash = hash;
  adbscan_manifest.trace = trace_of(outcome.adbscan);
  adbscan_manifest.report = outcome.adbscan_report;
  write_text_file(dir / "adbscan_manifest.txt", format_manifest(adbscan_manifest));

  write_text_file(dir / "summary.csv", "algorithm," + report_csv_header() + "\ndbscan," +
                                           report_csv_row(outcome.dbscan_report) + "\nadbscan," +
                                           report_csv_row(outcome.adbscan_report) + "\n");
}

}  // namespace varden
