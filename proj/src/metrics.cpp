#include "varden/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "varden/error.hpp"
#include "varden/numfmt.hpp"

namespace varden {

namespace {

double pairs(std::uint64_t count) {
  const auto c = static_cast<double>(count);
  return c * (c - 1.0) / 2.0;
}

}  // namespace

double adjusted_rand_index(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size()) throw Error(Errc::LengthMismatch, "label lists differ in length");
  if (truth.size() < 2) throw Error(Errc::DegenerateInput, "ARI needs at least two points");

  std::map<std::pair<int, int>, std::uint64_t> cells;
  std::map<int, std::uint64_t> rows;
  std::map<int, std::uint64_t> cols;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++cells[{truth[i], predicted[i]}];
    ++rows[truth[i]];
    ++cols[predicted[i]];
  }
  double index = 0.0;
  for (const auto& [key, count] : cells) index += pairs(count);
  double sum_rows = 0.0;
  for (const auto& [key, count] : rows) sum_rows += pairs(count);
  double sum_cols = 0.0;
  for (const auto& [key, count] : cols) sum_cols += pairs(count);

  const double expected = sum_rows * sum_cols / pairs(truth.size());
  const double max_index = (sum_rows + sum_cols) / 2.0;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

int majority_label(std::span<const int> truth, const PointSet& ids) {
  std::map<int, std::size_t> counts;
  for (PointId id : ids) ++counts[truth[id]];
  int best = kNoise;
  std::size_t best_count = 0;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

EvalReport evaluate(const Dataset& d, const Labeling& labeling) {
  if (!d.truth) throw Error(Errc::MissingGroundTruth, "dataset has no ground-truth labels");
  if (labeling.size() != d.size()) throw Error(Errc::LengthMismatch, "labeling does not cover the dataset");
  const std::span<const int> truth = *d.truth;

  EvalReport report;
  report.num_clusters_found = labeling.num_clusters;
  report.ari = adjusted_rand_index(truth, labeling.assignment);
  const auto noise = static_cast<double>(std::count(labeling.assignment.begin(), labeling.assignment.end(), kNoise));
  report.noise_fraction = noise / static_cast<double>(d.size());
  for (const PointSet& cluster : labeling.clusters()) {
    const int major = majority_label(truth, cluster);
    const auto agree = std::count_if(cluster.begin(), cluster.end(), [&](PointId id) { return truth[id] == major; });
    report.per_cluster_purity.push_back(static_cast<double>(agree) / static_cast<double>(cluster.size()));
  }
  return report;
}

EvalReport evaluate(const Dataset& d, const AdaptiveResult& result) {
  if (result.point_class.size() != d.size()) throw Error(Errc::LengthMismatch, "result does not cover the dataset");
  return evaluate(d, result.to_labeling());
}

std::string report_csv_header() { return "num_clusters_found,ari,noise_fraction,per_cluster_purity"; }

std::string report_csv_row(const EvalReport& report) {
  std::string row = std::to_string(report.num_clusters_found) + ',' + format_double(report.ari) + ',' +
                    format_double(report.noise_fraction) + ',';
  for (std::size_t i = 0; i < report.per_cluster_purity.size(); ++i) {
    if (i > 0) row += ';';
    row += format_double(report.per_cluster_purity[i]);
  }
  return row;
}

}  // namespace varden
