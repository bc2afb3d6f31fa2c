#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varden/model.hpp"

namespace varden {

// Squared Euclidean distance, accumulated in axis order. Every ball test in the
// library goes through this so that the index and the brute-force scan agree
// bit for bit.
double squared_distance(std::span<const double> a, std::span<const double> b);

// Closed-ball membership: |a - b| <= eps.
inline bool within_eps(std::span<const double> a, std::span<const double> b, double eps) {
  return squared_distance(a, b) <= eps * eps;
}

// Immutable k-d tree over a copy of the dataset's coordinates. Queries are
// const and safe to issue from several threads at once.
class NeighborIndex {
 public:
  explicit NeighborIndex(const Dataset& d);

  std::size_t size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return dim_; }

  std::span<const double> coords(PointId pid) const;

  // { q : |p - q| <= eps }, always containing pid.
  PointSet region_query(PointId pid, double eps) const;

  // Same predicate as region_query, without materializing the set.
  std::size_t count_within(PointId pid, double eps) const;

 private:
  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t axis = 0;
    double split = 0.0;
    int left = -1;  // -1 marks a leaf
    int right = -1;
  };

  int build(std::size_t begin, std::size_t end);
  void check_query(PointId pid, double eps) const;

  template <typename Visit>
  void for_each_within(PointId pid, double eps, Visit&& visit) const;

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;  // row-major, n_ x dim_
  std::vector<PointId> order_;  // leaf buckets reference ranges of this
  std::vector<Node> nodes_;
};

NeighborIndex build_index(const Dataset& d);

PointSet region_query(const NeighborIndex& ix, PointId pid, double eps);

// Reference scan over all points; identical contract to region_query.
PointSet region_query_naive(const Dataset& d, PointId pid, double eps);

// Maximum pairwise Euclidean distance; 0 for a single point.
double dataset_diameter(const Dataset& d);

}  // namespace varden
