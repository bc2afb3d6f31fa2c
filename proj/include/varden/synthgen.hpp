#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "varden/model.hpp"

namespace varden {

// xoshiro256** 1.0 (Blackman & Vigna), state seeded from four successive
// SplitMix64 outputs. Fixed here so generated datasets match across builds
// and platforms; std:: engines and distributions are never used.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

struct BlobSpec {
  Point center;
  double std_dev = 1.0;
  std::size_t count = 1;

  friend bool operator==(const BlobSpec&, const BlobSpec&) = default;
};

struct Box2 {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  bool contains(const Point& p) const;

  friend bool operator==(const Box2&, const Box2&) = default;
};

struct ScenarioSpec {
  std::vector<BlobSpec> blobs;
  std::size_t noise_count = 0;
  Box2 noise_bounds;
  std::uint64_t seed = 1;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

void validate(const ScenarioSpec& spec);

// Blob points come first, blob by blob, then the uniform noise. Truth labels
// are the blob index, or kNoise for the background points. Each blob point
// uses one Box-Muller pair: (x, y) = center + std_dev * r * (cos t, sin t).
Dataset gen_scenario(const ScenarioSpec& spec);

// Built-in scenarios, one equal-density and two varying-density:
// "two_equal", "three_varying", "four_varying". Seed is 1; callers override.
ScenarioSpec builtin_scenario(std::string_view name);
std::vector<std::string> scenario_names();

// Index of the blob with the smallest std_dev (first on ties).
std::size_t densest_blob(const ScenarioSpec& spec);

// Key-value text form:
//   # comment
//   seed = 7
//   noise_count = 45
//   noise_bounds = x_min x_max y_min y_max
//   blob = center_x center_y std_dev count      (one line per blob, in order)
std::string format_scenario(const ScenarioSpec& spec);
ScenarioSpec parse_scenario(std::string_view text);

}  // namespace varden
