#include "varden/model.hpp"

#include <cmath>
#include <string>

#include "varden/error.hpp"

namespace varden {

void validate(const DbscanParams& params) {
  if (!(params.eps > 0.0) || !std::isfinite(params.eps)) {
    throw Error(Errc::NonPositiveEps, "eps must be a positive finite radius, got " + std::to_string(params.eps));
  }
  if (params.min_pts < 1) {
    throw Error(Errc::InvalidParams, "min_pts must be at least 1");
  }
}

std::string_view to_string(PointClass cls) {
  switch (cls) {
    case PointClass::Core: return "core";
    case PointClass::Border: return "border";
    case PointClass::Noise: return "noise";
  }
  return "noise";
}

std::vector<PointSet> Labeling::clusters() const {
  std::vector<PointSet> out(num_clusters);
  for (PointId i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != kNoise) out[static_cast<std::size_t>(assignment[i])].push_back(i);
  }
  return out;
}

PointSet Labeling::noise() const {
  PointSet out;
  for (PointId i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == kNoise) out.push_back(i);
  }
  return out;
}

bool is_valid_labeling(const Labeling& labeling, std::size_t n) {
  if (labeling.assignment.size() != n || labeling.point_class.size() != n) return false;
  std::vector<bool> used(labeling.num_clusters, false);
  std::vector<bool> has_core(labeling.num_clusters, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int id = labeling.assignment[i];
    const bool is_noise_class = labeling.point_class[i] == PointClass::Noise;
    if ((id == kNoise) != is_noise_class) return false;
    if (id == kNoise) continue;
    if (id < 0 || static_cast<std::size_t>(id) >= labeling.num_clusters) return false;
    used[id] = true;
    if (labeling.point_class[i] == PointClass::Core) has_core[id] = true;
  }
  for (std::size_t c = 0; c < labeling.num_clusters; ++c) {
    if (!used[c] || !has_core[c]) return false;
  }
  return true;
}

void validate(const AdbscanParams& p) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidParams, msg); };
  if (!(p.eps0 > 0.0) || !std::isfinite(p.eps0)) fail("eps0 must be positive");
  if (!(p.min_pts0 > 0.0) || !std::isfinite(p.min_pts0)) fail("min_pts0 must be positive");
  if (!(p.eps_step > 0.0) || !std::isfinite(p.eps_step)) fail("eps step must be positive");
  if (!(p.min_pts_step >= 0.0) || !std::isfinite(p.min_pts_step)) fail("min_pts step must be nonnegative");
  if (!(p.residual_fraction > 0.0 && p.residual_fraction < p.accept_fraction && p.accept_fraction < 1.0)) {
    fail("fractions must satisfy 0 < residual < accept < 1");
  }
  if (p.k < 1) fail("k must be at least 1");
  if (p.max_iters < 1) fail("max_iters must be at least 1");
  if (p.eps_cap && (!std::isfinite(*p.eps_cap) || *p.eps_cap < p.eps0)) fail("eps_cap must be >= eps0");
}

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::ClustersFound: return "clusters_found";
    case Termination::ResidualExhausted: return "residual_exhausted";
    case Termination::EpsCapReached: return "eps_cap_reached";
    case Termination::MaxItersReached: return "max_iters_reached";
  }
  return "clusters_found";
}

std::optional<Termination> termination_from_string(std::string_view name) {
  for (auto t : {Termination::ClustersFound, Termination::ResidualExhausted, Termination::EpsCapReached,
                 Termination::MaxItersReached}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

Labeling AdaptiveResult::to_labeling() const {
  Labeling out;
  out.assignment.assign(point_class.size(), kNoise);
  out.point_class = point_class;
  out.num_clusters = clusters.size();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (PointId id : clusters[c]) out.assignment[id] = static_cast<int>(c);
  }
  return out;
}

const Dataset& validate_dataset(const Dataset& d) {
  if (d.empty()) throw Error(Errc::EmptyDataset, "dataset has no points");
  const std::size_t dim = d.points.front().dimension();
  if (dim == 0) throw Error(Errc::DimensionMismatch, "point 0 has no coordinates", 0);
  for (PointId i = 0; i < d.size(); ++i) {
    const Point& p = d.points[i];
    if (p.dimension() != dim) {
      throw Error(Errc::DimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " + std::to_string(p.dimension()) +
                      ", expected " + std::to_string(dim),
                  i);
    }
    for (double c : p.coords()) {
      if (!std::isfinite(c)) {
        throw Error(Errc::NonFiniteCoordinate, "point " + std::to_string(i) + " has a non-finite coordinate", i);
      }
    }
  }
  if (d.truth && d.truth->size() != d.size()) {
    throw Error(Errc::LengthMismatch, "truth labels do not match the number of points");
  }
  return d;
}

Dataset subset(const Dataset& d, std::span<const PointId> ids) {
  Dataset out;
  out.points.reserve(ids.size());
  if (d.truth) out.truth.emplace().reserve(ids.size());
  for (PointId id : ids) {
    out.points.push_back(d.points.at(id));
    if (d.truth) out.truth->push_back((*d.truth)[id]);
  }
  return out;
}

}  // namespace varden
