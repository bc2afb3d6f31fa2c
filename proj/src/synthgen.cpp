#include "varden/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "varden/error.hpp"
#include "varden/numfmt.hpp"

namespace varden {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Box2::contains(const Point& p) const {
  return p.dimension() == 2 && p[0] >= x_min && p[0] <= x_max && p[1] >= y_min && p[1] <= y_max;
}

void validate(const ScenarioSpec& spec) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidSpec, msg); };
  const Box2& b = spec.noise_bounds;
  if (!std::isfinite(b.x_min) || !std::isfinite(b.x_max) || !std::isfinite(b.y_min) || !std::isfinite(b.y_max) ||
      b.x_min > b.x_max || b.y_min > b.y_max) {
    fail("noise_bounds must be a finite box with min <= max");
  }
  if (spec.blobs.empty() && spec.noise_count == 0) fail("scenario produces no points");
  for (std::size_t i = 0; i < spec.blobs.size(); ++i) {
    const BlobSpec& blob = spec.blobs[i];
    const std::string where = "blob " + std::to_string(i) + ": ";
    if (blob.center.dimension() != 2) fail(where + "center must be 2-D");
    if (!(blob.std_dev > 0.0) || !std::isfinite(blob.std_dev)) fail(where + "std_dev must be positive");
    if (blob.count < 1) fail(where + "count must be at least 1");
    if (!b.contains(blob.center)) fail(where + "center lies outside noise_bounds");
  }
}

Dataset gen_scenario(const ScenarioSpec& spec) {
  validate(spec);
  Xoshiro256 rng(spec.seed);
  Dataset out;
  out.truth.emplace();
  for (std::size_t label = 0; label < spec.blobs.size(); ++label) {
    const BlobSpec& blob = spec.blobs[label];
    for (std::size_t i = 0; i < blob.count; ++i) {
      const double u1 = 1.0 - rng.uniform();  // (0, 1]
      const double u2 = rng.uniform();
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double theta = 2.0 * std::numbers::pi * u2;
      out.points.push_back(Point{blob.center[0] + blob.std_dev * r * std::cos(theta),
                                 blob.center[1] + blob.std_dev * r * std::sin(theta)});
      out.truth->push_back(static_cast<int>(label));
    }
  }
  const Box2& b = spec.noise_bounds;
  for (std::size_t i = 0; i < spec.noise_count; ++i) {
    const double x = b.x_min + (b.x_max - b.x_min) * rng.uniform();
    const double y = b.y_min + (b.y_max - b.y_min) * rng.uniform();
    out.points.push_back(Point{x, y});
    out.truth->push_back(kNoise);
  }
  return out;
}

// Geometry notes. Counts, spreads and noise totals are fixed; centers are
// placed so each pair of blobs sits well over 6x the larger spread apart, and
// the background box keeps noise sparse relative to the sparsest blob.
ScenarioSpec builtin_scenario(std::string_view name) {
  ScenarioSpec spec;
  if (name == "two_equal") {
    spec.blobs = {{Point{0.0, 0.0}, 0.15, 300}, {Point{3.0, 0.0}, 0.15, 300}};
    spec.noise_count = 30;
    spec.noise_bounds = {-1.5, 4.5, -1.5, 1.5};
  } else if (name == "three_varying") {
    spec.blobs = {{Point{0.0, 0.0}, 0.2, 300}, {Point{10.0, 0.0}, 1.0, 300}, {Point{5.0, 22.0}, 2.5, 300}};
    spec.noise_count = 45;
    spec.noise_bounds = {-6.0, 16.0, -6.0, 32.0};
  } else if (name == "four_varying") {
    spec.blobs = {{Point{0.0, 0.0}, 0.2, 300},
                  {Point{10.0, 0.0}, 0.8, 300},
                  {Point{0.0, 24.0}, 1.8, 300},
                  {Point{28.0, 24.0}, 3.0, 300}};
    spec.noise_count = 60;
    spec.noise_bounds = {-8.0, 40.0, -8.0, 38.0};
  } else {
    throw Error(Errc::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
  }
  return spec;
}

std::vector<std::string> scenario_names() { return {"two_equal", "three_varying", "four_varying"}; }

std::size_t densest_blob(const ScenarioSpec& spec) {
  if (spec.blobs.empty()) throw Error(Errc::InvalidSpec, "scenario has no blobs");
  const auto it = std::min_element(spec.blobs.begin(), spec.blobs.end(),
                                   [](const BlobSpec& a, const BlobSpec& b) { return a.std_dev < b.std_dev; });
  return static_cast<std::size_t>(it - spec.blobs.begin());
}

std::string format_scenario(const ScenarioSpec& spec) {
  std::ostringstream os;
  os << "seed = " << spec.seed << '\n';
  os << "noise_count = " << spec.noise_count << '\n';
  const Box2& b = spec.noise_bounds;
  os << "noise_bounds = " << format_double(b.x_min) << ' ' << format_double(b.x_max) << ' '
     << format_double(b.y_min) << ' ' << format_double(b.y_max) << '\n';
  for (const BlobSpec& blob : spec.blobs) {
    os << "blob = " << format_double(blob.center[0]) << ' ' << format_double(blob.center[1]) << ' '
       << format_double(blob.std_dev) << ' ' << blob.count << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view text) {
  ScenarioSpec spec;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& msg) {
      throw Error(Errc::InvalidSpec, "line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const auto fields = split_ws(trim(line.substr(eq + 1)));
    auto number = [&](std::size_t i) {
      const auto v = parse_double(fields[i]);
      if (!v) fail("'" + std::string(fields[i]) + "' is not a number");
      return *v;
    };
    auto count = [&](std::size_t i) {
      const auto v = parse_uint(fields[i]);
      if (!v) fail("'" + std::string(fields[i]) + "' is not a nonnegative integer");
      return *v;
    };

    if (key == "seed") {
      if (fields.size() != 1) fail("seed takes one value");
      spec.seed = count(0);
    } else if (key == "noise_count") {
      if (fields.size() != 1) fail("noise_count takes one value");
      spec.noise_count = count(0);
    } else if (key == "noise_bounds") {
      if (fields.size() != 4) fail("noise_bounds takes x_min x_max y_min y_max");
      spec.noise_bounds = {number(0), number(1), number(2), number(3)};
    } else if (key == "blob") {
      if (fields.size() != 4) fail("blob takes center_x center_y std_dev count");
      spec.blobs.push_back({Point{number(0), number(1)}, number(2), count(3)});
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  validate(spec);
  return spec;
}

}  // namespace varden
