#include "varden/dbscan.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "varden/error.hpp"

namespace varden {

namespace {

void check_pid(const NeighborIndex& ix, PointId pid) {
  if (pid >= ix.size()) throw Error(Errc::InvalidPointId, "point id " + std::to_string(pid) + " out of range", pid);
}

bool is_core(const NeighborIndex& ix, PointId pid, const DbscanParams& params) {
  return ix.count_within(pid, params.eps) >= params.min_pts;
}

// Marks every point reachable from `sources` by hopping through core points.
// Only core points are expanded; non-core points are reached but never left.
std::vector<bool> reach_through_cores(const NeighborIndex& ix, const std::vector<PointId>& sources,
                                      const DbscanParams& params) {
  std::vector<bool> reached(ix.size(), false);
  std::deque<PointId> queue;
  for (PointId s : sources) {
    if (!reached[s]) {
      reached[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const PointId cur = queue.front();
    queue.pop_front();
    const PointSet nbrs = ix.region_query(cur, params.eps);
    if (nbrs.size() < params.min_pts) continue;
    for (PointId nb : nbrs) {
      if (!reached[nb]) {
        reached[nb] = true;
        queue.push_back(nb);
      }
    }
  }
  return reached;
}

}  // namespace

Labeling run_dbscan(const Dataset& d, const DbscanParams& params) {
  validate_dataset(d);
  return run_dbscan(NeighborIndex(d), params);
}

Labeling run_dbscan(const NeighborIndex& ix, const DbscanParams& params) {
  validate(params);
  const std::size_t n = ix.size();

  std::vector<PointSet> neighbors(n);
  std::vector<bool> core(n, false);
  for (PointId i = 0; i < n; ++i) {
    neighbors[i] = ix.region_query(i, params.eps);
    core[i] = neighbors[i].size() >= params.min_pts;
  }

  Labeling out;
  out.assignment.assign(n, kNoise);
  out.point_class.assign(n, PointClass::Noise);

  std::deque<PointId> queue;
  for (PointId seed = 0; seed < n; ++seed) {
    if (!core[seed] || out.assignment[seed] != kNoise) continue;
    const int cluster = static_cast<int>(out.num_clusters++);
    out.assignment[seed] = cluster;
    queue.push_back(seed);
    while (!queue.empty()) {
      const PointId cur = queue.front();
      queue.pop_front();
      for (PointId nb : neighbors[cur]) {
        if (out.assignment[nb] != kNoise) continue;
        out.assignment[nb] = cluster;
        if (core[nb]) queue.push_back(nb);
      }
    }
  }

  for (PointId i = 0; i < n; ++i) {
    if (core[i]) {
      out.point_class[i] = PointClass::Core;
    } else if (out.assignment[i] != kNoise) {
      out.point_class[i] = PointClass::Border;
    }
  }
  return out;
}

PointSet core_points(const NeighborIndex& ix, const DbscanParams& params) {
  validate(params);
  PointSet out;
  for (PointId i = 0; i < ix.size(); ++i) {
    if (is_core(ix, i, params)) out.push_back(i);
  }
  return out;
}

PointClass classify_point(const NeighborIndex& ix, PointId pid, const DbscanParams& params,
                          const PointSet& core_set) {
  check_pid(ix, pid);
  validate(params);
  const PointSet nbrs = ix.region_query(pid, params.eps);
  if (nbrs.size() >= params.min_pts) return PointClass::Core;
  for (PointId nb : nbrs) {
    if (std::binary_search(core_set.begin(), core_set.end(), nb)) return PointClass::Border;
  }
  return PointClass::Noise;
}

bool is_directly_density_reachable(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params) {
  check_pid(ix, p);
  check_pid(ix, q);
  validate(params);
  return within_eps(ix.coords(p), ix.coords(q), params.eps) && is_core(ix, q, params);
}

bool is_density_reachable(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params) {
  check_pid(ix, p);
  check_pid(ix, q);
  validate(params);
  if (p == q) return true;
  return reach_through_cores(ix, {q}, params)[p];
}

bool is_density_connected(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params) {
  check_pid(ix, p);
  check_pid(ix, q);
  validate(params);
  if (p == q) return true;
  // A non-core witness reaches only itself, so any witness for p != q is a
  // core point from which p is reachable. Such cores are exactly those in the
  // core-connected components touching p's eps-ball (density reachability is
  // symmetric between cores). Seed the search with them and test q.
  std::vector<PointId> seeds;
  for (PointId nb : ix.region_query(p, params.eps)) {
    if (is_core(ix, nb, params)) seeds.push_back(nb);
  }
  if (seeds.empty()) return false;
  return reach_through_cores(ix, seeds, params)[q];
}

}  // namespace varden
