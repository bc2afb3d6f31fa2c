#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// index, clustering, or metric code paths.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "varden/model.hpp"

namespace varden::oracle {

inline double sqdist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline double brute_diameter(const Dataset& d) {
  double best = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) best = std::max(best, std::sqrt(sqdist(d.points[i], d.points[j])));
  return best;
}

// ARI straight from the pair definition: classify all C(n,2) pairs.
inline double pair_ari(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  double both = 0, only_a = 0, only_b = 0, neither = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      if (sa && sb) both += 1;
      else if (sa) only_a += 1;
      else if (sb) only_b += 1;
      else neither += 1;
    }
  }
  const double total = both + only_a + only_b + neither;
  const double pairs_a = both + only_a;
  const double pairs_b = both + only_b;
  const double expected = pairs_a * pairs_b / total;
  const double max_index = (pairs_a + pairs_b) / 2.0;
  if (max_index == expected) return 1.0;
  return (both - expected) / (max_index - expected);
}

// Core flags by an all-pairs count (self included).
inline std::vector<bool> brute_cores(const Dataset& d, double eps, std::size_t min_pts) {
  std::vector<bool> core(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < d.size(); ++j) count += sqdist(d.points[i], d.points[j]) <= eps * eps;
    core[i] = count >= min_pts;
  }
  return core;
}

// Component id of each core point under eps-adjacency; -1 for non-cores.
inline std::vector<int> brute_core_components(const Dataset& d, double eps, std::size_t min_pts) {
  const auto core = brute_cores(d, eps, min_pts);
  std::vector<std::size_t> parent(d.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (core[i] && core[j] && sqdist(d.points[i], d.points[j]) <= eps * eps) parent[find(i)] = find(j);
  std::vector<int> out(d.size(), -1);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (core[i]) out[i] = static_cast<int>(find(i));
  return out;
}

// True when two labelings induce the same partition (exact, relabel-invariant).
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, new1] = ab.emplace(a[i], b[i]);
    auto [it2, new2] = ba.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

// Random dataset with a mix of clumps and scatter so neighborhoods vary.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t dim, double extent = 10.0) {
  std::uniform_real_distribution<double> uni(0.0, extent);
  std::normal_distribution<double> gauss(0.0, extent / 30.0);
  std::vector<Point> centers;
  for (int c = 0; c < 3; ++c) {
    std::vector<double> xs(dim);
    for (auto& x : xs) x = uni(rng);
    centers.emplace_back(std::move(xs));
  }
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> xs(dim);
    if (rng() % 3 == 0) {
      for (auto& x : xs) x = uni(rng);
    } else {
      const Point& c = centers[rng() % centers.size()];
      for (std::size_t k = 0; k < dim; ++k) xs[k] = c[k] + gauss(rng);
    }
    // Occasional exact duplicate and grid-snapped coordinates to hit ties.
    if (i > 0 && rng() % 25 == 0) {
      const auto src = d.points[rng() % i].coords();
      xs.assign(src.begin(), src.end());
    }
    if (rng() % 10 == 0)
      for (auto& x : xs) x = std::round(x * 4.0) / 4.0;
    d.points.emplace_back(std::move(xs));
  }
  return d;
}

}  // namespace varden::oracle
