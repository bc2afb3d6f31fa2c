#include "varden/adbscan.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "varden/dbscan.hpp"
#include "varden/error.hpp"
#include "varden/neighborhood.hpp"

namespace varden {

std::size_t ParamState::effective_min_pts() const {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(min_pts)));
}

ParamState step_params(ParamState current, double step) { return step_params(current, step, step); }

ParamState step_params(ParamState current, double eps_step, double min_pts_step) {
  return {current.eps + eps_step, current.min_pts + min_pts_step};
}

std::optional<PointSet> accept_cluster(const Labeling& labeling, std::size_t original_n, double accept_fraction) {
  if (labeling.num_clusters == 0) return std::nullopt;
  std::vector<std::size_t> sizes(labeling.num_clusters, 0);
  for (int id : labeling.assignment) {
    if (id != kNoise) ++sizes[static_cast<std::size_t>(id)];
  }
  const auto largest = std::max_element(sizes.begin(), sizes.end());
  if (!(static_cast<double>(*largest) > accept_fraction * static_cast<double>(original_n))) return std::nullopt;
  const int id = static_cast<int>(std::distance(sizes.begin(), largest));
  PointSet out;
  out.reserve(*largest);
  for (PointId i = 0; i < labeling.assignment.size(); ++i) {
    if (labeling.assignment[i] == id) out.push_back(i);
  }
  return out;
}

PointSet remove_cluster(const PointSet& remaining, const PointSet& cluster) {
  if (!std::includes(remaining.begin(), remaining.end(), cluster.begin(), cluster.end())) {
    throw Error(Errc::ClusterNotSubset, "cluster contains ids that are not in the remaining set");
  }
  PointSet out;
  out.reserve(remaining.size() - cluster.size());
  std::set_difference(remaining.begin(), remaining.end(), cluster.begin(), cluster.end(), std::back_inserter(out));
  return out;
}

AdaptiveResult run_adbscan(const Dataset& d, const AdbscanParams& params) {
  validate_dataset(d);
  validate(params);
  const std::size_t n = d.size();
  const double eps_cap = params.eps_cap.value_or(std::max(dataset_diameter(d), params.eps0));
  const double residual_limit = params.residual_fraction * static_cast<double>(n);

  AdaptiveResult result;
  result.point_class.assign(n, PointClass::Noise);

  PointSet remaining(n);
  for (PointId i = 0; i < n; ++i) remaining[i] = i;

  ParamState state{params.eps0, params.min_pts0};
  std::size_t iter = 0;
  for (;;) {
    if (result.clusters.size() >= params.k) {
      result.termination = Termination::ClustersFound;
      break;
    }
    if (static_cast<double>(remaining.size()) <= residual_limit) {
      result.termination = Termination::ResidualExhausted;
      break;
    }
    if (state.eps > eps_cap) {
      result.termination = Termination::EpsCapReached;
      break;
    }
    if (iter >= params.max_iters) {
      result.termination = Termination::MaxItersReached;
      break;
    }
    ++iter;

    const DbscanParams pass{state.eps, state.effective_min_pts()};
    const Labeling labeling = run_dbscan(NeighborIndex(subset(d, remaining)), pass);
    const std::optional<PointSet> local = accept_cluster(labeling, n, params.accept_fraction);

    IterationRecord record;
    record.iter = iter;
    record.eps = state.eps;
    record.min_pts_effective = pass.min_pts;
    record.remaining = remaining.size();
    record.accepted = local.has_value();

    if (local) {
      record.recognized_fraction = static_cast<double>(local->size()) / static_cast<double>(n);
      PointSet cluster;
      cluster.reserve(local->size());
      for (PointId li : *local) {
        cluster.push_back(remaining[li]);
        result.point_class[remaining[li]] = labeling.point_class[li];
      }
      remaining = remove_cluster(remaining, cluster);
      result.clusters.push_back(std::move(cluster));
    } else {
      std::size_t largest = 0;
      for (const PointSet& c : labeling.clusters()) largest = std::max(largest, c.size());
      record.recognized_fraction = static_cast<double>(largest) / static_cast<double>(n);
    }
    result.trace.push_back(record);
    state = step_params(state, params.eps_step, params.min_pts_step);
  }

  result.noise = std::move(remaining);
  return result;
}

}  // namespace varden
