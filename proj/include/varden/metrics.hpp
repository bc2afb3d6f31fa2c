#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "varden/model.hpp"

namespace varden {

struct EvalReport {
  std::size_t num_clusters_found = 0;
  double ari = 0.0;
  double noise_fraction = 0.0;
  std::vector<double> per_cluster_purity;  // cluster id order

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Pair-counting ARI over raw label values. kNoise is an ordinary label here,
// so noise forms one extra class on whichever side uses it. Two identical
// trivial partitions (all together, or all apart) score 1.
double adjusted_rand_index(std::span<const int> truth, std::span<const int> predicted);

// Most frequent truth label among the ids (smallest label on ties).
int majority_label(std::span<const int> truth, const PointSet& ids);

EvalReport evaluate(const Dataset& d, const Labeling& labeling);
EvalReport evaluate(const Dataset& d, const AdaptiveResult& result);

// CSV column order: num_clusters_found,ari,noise_fraction,per_cluster_purity
// where the last column joins the purities with ';'.
std::string report_csv_header();
std::string report_csv_row(const EvalReport& report);

}  // namespace varden
