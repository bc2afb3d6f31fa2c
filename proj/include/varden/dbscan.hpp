#pragma once

#include "varden/model.hpp"
#include "varden/neighborhood.hpp"

namespace varden {

// Classic DBSCAN. Seeds are visited in index order; clusters grow through a
// FIFO work queue; a border point joins the first cluster whose expansion
// reaches it. Neighborhoods count the point itself.
Labeling run_dbscan(const Dataset& d, const DbscanParams& params);
Labeling run_dbscan(const NeighborIndex& ix, const DbscanParams& params);

// Points whose closed eps-ball holds at least min_pts points.
PointSet core_points(const NeighborIndex& ix, const DbscanParams& params);

PointClass classify_point(const NeighborIndex& ix, PointId pid, const DbscanParams& params,
                          const PointSet& core_set);

// Definition-level predicates. These answer from the index alone and never
// consult a clustering run, so they serve as oracles for run_dbscan.

// p lies in the eps-ball of q and q is core.
bool is_directly_density_reachable(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params);

// A chain q = p1, ..., pn = p of directly density-reachable steps exists. The
// one-element chain makes every point reachable from itself.
bool is_density_reachable(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params);

// Some witness o has both p and q density-reachable from it.
bool is_density_connected(const NeighborIndex& ix, PointId p, PointId q, const DbscanParams& params);

}  // namespace varden
