#pragma once

#include <cstddef>
#include <optional>

#include "varden/model.hpp"

namespace varden {

// Radius plus the real-valued density threshold; DBSCAN passes use the
// ceiling of min_pts.
struct ParamState {
  double eps = 0.0;
  double min_pts = 0.0;

  std::size_t effective_min_pts() const;

  friend bool operator==(const ParamState&, const ParamState&) = default;
};

ParamState step_params(ParamState current, double step);
ParamState step_params(ParamState current, double eps_step, double min_pts_step);

// Largest cluster of the labeling (lowest id on ties) if it holds strictly more
// than accept_fraction * original_n points.
std::optional<PointSet> accept_cluster(const Labeling& labeling, std::size_t original_n, double accept_fraction);

// remaining \ cluster. Throws ClusterNotSubset if cluster has a foreign id.
PointSet remove_cluster(const PointSet& remaining, const PointSet& cluster);

// Adaptive DBSCAN. Each iteration clusters the still-unassigned points with
// the current (eps, ceil(min_pts)); the largest cluster is kept when it covers
// more than accept_fraction of the original dataset. Parameters then grow by
// their steps whether or not a cluster was kept. The run stops once k
// clusters are kept, once at most residual_fraction of the points remain, or
// when eps passes eps_cap / the iteration budget runs out. Leftovers are noise.
AdaptiveResult run_adbscan(const Dataset& d, const AdbscanParams& params);

}  // namespace varden
