#include "varden/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "varden/error.hpp"

namespace varden {

namespace {

constexpr std::size_t kLeafSize = 12;

void check_eps(double eps) {
  if (!(eps > 0.0)) throw Error(Errc::NonPositiveEps, "eps must be positive, got " + std::to_string(eps));
}

void check_pid(PointId pid, std::size_t n) {
  if (pid >= n) {
    throw Error(Errc::InvalidPointId, "point id " + std::to_string(pid) + " out of range for " +
                                          std::to_string(n) + " points",
                pid);
  }
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

NeighborIndex::NeighborIndex(const Dataset& d) {
  if (d.empty()) throw Error(Errc::EmptyDataset, "cannot index an empty dataset");
  n_ = d.size();
  dim_ = d.dimension();
  coords_.reserve(n_ * dim_);
  for (const Point& p : d.points) {
    if (p.dimension() != dim_) throw Error(Errc::DimensionMismatch, "mixed point dimensions");
    coords_.insert(coords_.end(), p.coords().begin(), p.coords().end());
  }
  order_.resize(n_);
  for (PointId i = 0; i < n_; ++i) order_[i] = i;
  nodes_.reserve(2 * (n_ / kLeafSize + 1));
  build(0, n_);
}

int NeighborIndex::build(std::size_t begin, std::size_t end) {
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{begin, end});
  if (end - begin <= kLeafSize) return self;

  // Split on the axis of widest spread.
  std::size_t best_axis = 0;
  double best_spread = -1.0;
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    double lo = coords_[order_[begin] * dim_ + axis];
    double hi = lo;
    for (std::size_t i = begin + 1; i < end; ++i) {
      const double c = coords_[order_[i] * dim_ + axis];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      best_axis = axis;
    }
  }
  if (best_spread <= 0.0) return self;  // all coincident, keep as one bucket

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](PointId a, PointId b) { return coords_[a * dim_ + best_axis] < coords_[b * dim_ + best_axis]; });
  const double split = coords_[order_[mid] * dim_ + best_axis];
  const int left = build(begin, mid);
  const int right = build(mid, end);
  Node& node = nodes_[self];
  node.axis = best_axis;
  node.split = split;
  node.left = left;
  node.right = right;
  return self;
}

std::span<const double> NeighborIndex::coords(PointId pid) const {
  check_pid(pid, n_);
  return {coords_.data() + pid * dim_, dim_};
}

void NeighborIndex::check_query(PointId pid, double eps) const {
  check_pid(pid, n_);
  check_eps(eps);
}

template <typename Visit>
void NeighborIndex::for_each_within(PointId pid, double eps, Visit&& visit) const {
  const std::span<const double> q{coords_.data() + pid * dim_, dim_};
  const double eps2 = eps * eps;
  // Left children hold coordinates <= split, right children >= split. A side
  // is pruned only when the squared gap to the split plane already exceeds
  // eps^2, which bounds the full squared distance of everything behind it.
  int stack[128];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (node.left < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const PointId id = order_[i];
        if (squared_distance(q, {coords_.data() + id * dim_, dim_}) <= eps2) visit(id);
      }
      continue;
    }
    const double gap = q[node.axis] - node.split;
    const int near = gap <= 0.0 ? node.left : node.right;
    const int far = gap <= 0.0 ? node.right : node.left;
    if (gap * gap <= eps2) stack[top++] = far;
    stack[top++] = near;
  }
}

PointSet NeighborIndex::region_query(PointId pid, double eps) const {
  check_query(pid, eps);
  PointSet out;
  for_each_within(pid, eps, [&](PointId id) { out.push_back(id); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t NeighborIndex::count_within(PointId pid, double eps) const {
  check_query(pid, eps);
  std::size_t count = 0;
  for_each_within(pid, eps, [&](PointId) { ++count; });
  return count;
}

NeighborIndex build_index(const Dataset& d) { return NeighborIndex(d); }

PointSet region_query(const NeighborIndex& ix, PointId pid, double eps) { return ix.region_query(pid, eps); }

PointSet region_query_naive(const Dataset& d, PointId pid, double eps) {
  check_pid(pid, d.size());
  check_eps(eps);
  const auto q = d.points[pid].coords();
  PointSet out;
  for (PointId i = 0; i < d.size(); ++i) {
    if (squared_distance(q, d.points[i].coords()) <= eps * eps) out.push_back(i);
  }
  return out;
}

double dataset_diameter(const Dataset& d) {
  if (d.empty()) throw Error(Errc::EmptyDataset, "dataset has no points");
  double best = 0.0;
  for (PointId i = 0; i < d.size(); ++i) {
    for (PointId j = i + 1; j < d.size(); ++j) {
      best = std::max(best, squared_distance(d.points[i].coords(), d.points[j].coords()));
    }
  }
  return std::sqrt(best);
}

}  // namespace varden
