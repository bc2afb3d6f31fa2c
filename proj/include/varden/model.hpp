#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace varden {

// Point ids are positions in the owning Dataset.
using PointId = std::size_t;

// Sorted, duplicate-free list of point ids.
using PointSet = std::vector<PointId>;

// Label value shared by ground truth and predicted assignments for "no cluster".
inline constexpr int kNoise = -1;

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t axis) const { return coords_[axis]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Ordered points plus optional ground truth (cluster index >= 0 or kNoise).
struct Dataset {
  std::vector<Point> points;
  std::optional<std::vector<int>> truth;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  std::size_t dimension() const noexcept { return points.empty() ? 0 : points.front().dimension(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct DbscanParams {
  double eps = 0.5;
  std::size_t min_pts = 10;
};

void validate(const DbscanParams& params);

enum class PointClass : std::uint8_t { Core, Border, Noise };

std::string_view to_string(PointClass cls);

struct Labeling {
  std::vector<int> assignment;  // cluster id or kNoise
  std::vector<PointClass> point_class;
  std::size_t num_clusters = 0;

  std::size_t size() const noexcept { return assignment.size(); }
  std::vector<PointSet> clusters() const;
  PointSet noise() const;
};

// Linear scan over every Labeling invariant: matching lengths, Noise <=> kNoise,
// contiguous ids each used at least once, and a Core point in every cluster.
bool is_valid_labeling(const Labeling& labeling, std::size_t n);

struct AdbscanParams {
  double eps0 = 0.5;
  double min_pts0 = 10.0;
  double eps_step = 0.5;
  double min_pts_step = 0.5;
  double accept_fraction = 0.10;
  double residual_fraction = 0.05;
  std::size_t k = 1;
  std::optional<double> eps_cap;  // defaults to the dataset diameter
  std::size_t max_iters = 1000;
};

void validate(const AdbscanParams& params);

struct IterationRecord {
  std::size_t iter = 0;
  double eps = 0.0;
  std::size_t min_pts_effective = 0;
  double recognized_fraction = 0.0;
  bool accepted = false;
  std::size_t remaining = 0;  // points still unassigned when the pass ran

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

enum class Termination : std::uint8_t { ClustersFound, ResidualExhausted, EpsCapReached, MaxItersReached };

std::string_view to_string(Termination reason);
std::optional<Termination> termination_from_string(std::string_view name);

struct AdaptiveResult {
  std::vector<PointSet> clusters;  // discovery order
  PointSet noise;
  std::vector<IterationRecord> trace;
  std::vector<PointClass> point_class;  // class within the accepting pass; Noise otherwise
  Termination termination = Termination::ClustersFound;

  // True when a safety cap, not the k / residual rule, ended the run.
  bool budget_exhausted() const noexcept {
    return termination == Termination::EpsCapReached || termination == Termination::MaxItersReached;
  }

  // Cluster ids follow discovery order.
  Labeling to_labeling() const;
};

// Returns the dataset unchanged after checking it is nonempty, finite, and of
// uniform dimension (>= 1). Also checks the truth channel length when present.
const Dataset& validate_dataset(const Dataset& d);

// Copy of the listed points (and their truth labels) in the given order.
Dataset subset(const Dataset& d, std::span<const PointId> ids);

}  // namespace varden
