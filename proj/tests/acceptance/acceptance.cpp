// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "varden/adbscan.hpp"
#include "varden/cli.hpp"
#include "varden/csv_io.hpp"
#include "varden/dbscan.hpp"
#include "varden/experiment.hpp"
#include "varden/manifest.hpp"
#include "varden/metrics.hpp"
#include "varden/neighborhood.hpp"
#include "varden/synthgen.hpp"

using namespace varden;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("varden_acceptance_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  if (code != 0) std::fprintf(stderr, "cli failed: %s\n", err.str().c_str());
  return code;
}

ScenarioSpec seeded(const std::string& name, std::uint64_t seed) {
  ScenarioSpec spec = builtin_scenario(name);
  spec.seed = seed;
  return spec;
}

// C1: fixed eps 0.5 / min_pts 10 on two equal-density blobs, through the CLI.
Outcome equal_density_baseline() {
  Outcome o;
  const fs::path dir = scratch_dir("c1");
  const std::string data = (dir / "data.csv").string();
  const std::string labeled = (dir / "dbscan.csv").string();
  const std::string report = (dir / "report.txt").string();
  o.require(cli({"gen", "--scenario", "two_equal", "--seed", "1", "--out", data}) == 0, "gen");
  const auto start = Clock::now();
  o.require(cli({"dbscan", "--in", data, "--eps", "0.5", "--min-pts", "10", "--out", labeled}) == 0, "dbscan");
  const double elapsed = seconds_since(start);
  o.require(cli({"eval", "--in", data, "--pred", labeled, "--report", report}) == 0, "eval");
  const RunManifest m = parse_manifest(read_text_file(report));
  const EvalReport& r = m.report.value();
  o.note("clusters=" + std::to_string(r.num_clusters_found) + " ari=" + fmt(r.ari) + " noise=" +
         fmt(r.noise_fraction) + " time=" + fmt(elapsed, 3) + "s");
  o.require(r.num_clusters_found == 2, "exactly 2 clusters");
  o.require(r.ari >= 0.90, "ARI >= 0.90");
  o.require(r.noise_fraction <= 0.10, "noise fraction <= 0.10");
  o.require(elapsed < 1.0, "runtime < 1 s");
  fs::remove_all(dir);
  return o;
}

// C2 / C3: DBSCAN at the eps tuned to the densest blob.
Outcome dbscan_fails_on_varying(const std::string& scenario, std::size_t max_clusters, std::size_t exact_one_needed) {
  Outcome o;
  std::size_t exactly_one = 0;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CompareOutcome c = run_compare(seeded(scenario, seed));
    const std::size_t k = c.dbscan_report.num_clusters_found;
    exactly_one += k == 1;
    per_seed += " s" + std::to_string(seed) + ":eps=" + fmt(c.dbscan_params.eps, 2) + ",k=" + std::to_string(k) +
                ",ari=" + fmt(c.dbscan_report.ari, 3);
    o.require(k <= max_clusters, "seed " + std::to_string(seed) + " clusters <= " + std::to_string(max_clusters));
    o.require(c.dbscan_report.ari <= 0.60, "seed " + std::to_string(seed) + " ARI <= 0.60");
  }
  o.note(per_seed.substr(1));
  if (exact_one_needed > 0) {
    o.require(exactly_one >= exact_one_needed,
              "exactly 1 cluster in >= " + std::to_string(exact_one_needed) + " of 5 seeds");
  }
  return o;
}

struct AdaptiveRun {
  std::string scenario;
  std::uint64_t seed;
  ScenarioSpec spec;
  Dataset data;
  AdaptiveResult result;
  EvalReport report;
  double seconds;
};

std::vector<AdaptiveRun> adaptive_runs() {
  std::vector<AdaptiveRun> runs;
  for (const std::string scenario : {"three_varying", "four_varying"}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      AdaptiveRun run{scenario, seed, seeded(scenario, seed), {}, {}, {}, 0.0};
      run.data = gen_scenario(run.spec);
      AdbscanParams params;
      params.k = run.spec.blobs.size();
      const auto start = Clock::now();
      run.result = run_adbscan(run.data, params);
      run.seconds = seconds_since(start);
      run.report = evaluate(run.data, run.result);
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

// C4: ADBSCAN recovers every blob.
Outcome adbscan_succeeds(const std::vector<AdaptiveRun>& runs) {
  Outcome o;
  for (const std::string scenario : {"three_varying", "four_varying"}) {
    std::size_t strong = 0;
    std::string per_seed;
    for (const AdaptiveRun& run : runs) {
      if (run.scenario != scenario) continue;
      const std::string tag = scenario + " seed " + std::to_string(run.seed);
      const std::size_t k = run.spec.blobs.size();
      strong += run.report.ari >= 0.90;
      per_seed += " s" + std::to_string(run.seed) + ":k=" + std::to_string(run.result.clusters.size()) +
                  ",ari=" + fmt(run.report.ari, 3) + ",t=" + fmt(run.seconds, 3) + "s";
      o.require(run.result.clusters.size() == k, tag + " exactly k clusters");
      o.require(run.report.ari >= 0.85, tag + " ARI >= 0.85");
      for (double purity : run.report.per_cluster_purity) o.require(purity >= 0.90, tag + " purity >= 0.90");
      o.require(run.seconds < 5.0, tag + " runtime < 5 s");
    }
    o.require(strong >= 4, scenario + " ARI >= 0.90 in >= 4 of 5 seeds");
    o.note(scenario + ":" + per_seed);
  }
  return o;
}

// C5: densest blob first, acceptance eps nondecreasing.
Outcome density_ordering(const std::vector<AdaptiveRun>& runs) {
  Outcome o;
  std::size_t checked = 0;
  for (const AdaptiveRun& run : runs) {
    const std::string tag = run.scenario + " seed " + std::to_string(run.seed);
    std::vector<double> accepted;
    for (const IterationRecord& r : run.result.trace) {
      if (r.accepted) accepted.push_back(r.eps);
    }
    o.require(std::is_sorted(accepted.begin(), accepted.end()), tag + " acceptance eps nondecreasing");
    o.require(!run.result.clusters.empty() && majority_label(*run.data.truth, run.result.clusters.front()) ==
                                                  static_cast<int>(densest_blob(run.spec)),
              tag + " first cluster is the smallest-sigma blob");
    ++checked;
  }
  o.note(std::to_string(checked) + " runs checked");
  return o;
}

// C6: k-d tree range queries equal the brute-force scan.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(6006);
  std::size_t mismatches = 0;
  std::size_t queries = 0;
  const auto start = Clock::now();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 500;
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 3);
    const Dataset d = oracle::random_dataset(rng, n, dim);
    const NeighborIndex ix(d);
    std::uniform_real_distribution<double> eps_dist(1e-3, 4.0);
    for (int q = 0; q < 50; ++q) {
      const PointId pid = rng() % n;
      const double eps = eps_dist(rng);
      mismatches += ix.region_query(pid, eps) != region_query_naive(d, pid, eps);
      ++queries;
    }
  }
  const double elapsed = seconds_since(start);
  o.note(std::to_string(queries) + " queries, " + std::to_string(mismatches) + " mismatches, time=" + fmt(elapsed, 3) +
         "s");
  o.require(mismatches == 0, "zero mismatches");
  o.require(elapsed < 10.0, "runtime < 10 s");
  return o;
}

// C7: permuting the input never changes the core set or core partition.
Outcome order_invariance() {
  Outcome o;
  std::mt19937_64 rng(7007);
  std::size_t violations = 0;
  double worst_ari = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 150 + rng() % 250, 2);
    const DbscanParams p{0.2 + 0.05 * (trial % 8), 3 + static_cast<std::size_t>(trial % 6)};
    const Labeling base = run_dbscan(d, p);
    for (int perm = 0; perm < 10; ++perm) {
      std::vector<PointId> order(d.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const Labeling shuffled = run_dbscan(subset(d, order), p);
      std::vector<int> a, b;
      for (std::size_t k = 0; k < order.size(); ++k) {
        const bool core_base = base.point_class[order[k]] == PointClass::Core;
        const bool core_shuffled = shuffled.point_class[k] == PointClass::Core;
        violations += core_base != core_shuffled;
        if (core_base && core_shuffled) {
          a.push_back(base.assignment[order[k]]);
          b.push_back(shuffled.assignment[k]);
        }
      }
      if (a.size() >= 2) {
        const double ari = adjusted_rand_index(a, b);
        worst_ari = std::min(worst_ari, ari);
        violations += ari != 1.0;
      }
    }
  }
  o.note("200 permutations, worst core ARI=" + fmt(worst_ari, 12) + ", violations=" + std::to_string(violations));
  o.require(violations == 0, "identical core set and partition");
  return o;
}

// C8: clusters agree with the density-connectivity definition.
Outcome definition_soundness() {
  Outcome o;
  std::mt19937_64 rng(8008);
  std::size_t same_pairs = 0, cross_pairs = 0, violations = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 120 + rng() % 81, 2);
    const NeighborIndex ix(d);
    const DbscanParams p{0.3 + 0.05 * trial, 4};
    const Labeling l = run_dbscan(ix, p);
    for (PointId a = 0; a < d.size(); ++a) {
      for (PointId b = a + 1; b < d.size(); ++b) {
        if (l.assignment[a] == kNoise || l.assignment[b] == kNoise) continue;
        if (l.assignment[a] == l.assignment[b]) {
          ++same_pairs;
          violations += !is_density_connected(ix, a, b, p);
        } else if (l.point_class[a] == PointClass::Core && l.point_class[b] == PointClass::Core) {
          ++cross_pairs;
          violations += is_density_connected(ix, a, b, p);
        }
      }
    }
  }
  o.note(std::to_string(same_pairs) + " same-cluster pairs, " + std::to_string(cross_pairs) +
         " cross-cluster core pairs, violations=" + std::to_string(violations));
  o.require(violations == 0, "zero violations");
  o.require(same_pairs > 0 && cross_pairs > 0, "both pair kinds exercised");
  return o;
}

// C9: Core(eps) only grows with eps at fixed min_pts.
Outcome eps_monotonicity() {
  Outcome o;
  std::mt19937_64 rng(9009);
  std::size_t violations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 100 + rng() % 300, 1 + trial % 3);
    const NeighborIndex ix(d);
    std::uniform_real_distribution<double> eps_dist(0.01, 2.0);
    std::vector<double> grid(10);
    for (double& e : grid) e = eps_dist(rng);
    std::sort(grid.begin(), grid.end());
    const std::size_t min_pts = 2 + rng() % 10;
    PointSet prev;
    for (double eps : grid) {
      const PointSet cur = core_points(ix, {eps, min_pts});
      violations += !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end());
      prev = cur;
    }
  }
  o.note("20 datasets x 10 eps, violations=" + std::to_string(violations));
  o.require(violations == 0, "zero violations");
  return o;
}

// C10: ADBSCAN terminates on structureless data.
Outcome termination() {
  Outcome o;
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  Dataset d;
  for (int i = 0; i < 500; ++i) d.points.push_back(Point{u(rng), u(rng)});
  AdbscanParams p;
  p.k = 10;
  const auto start = Clock::now();
  const AdaptiveResult r = run_adbscan(d, p);
  const double elapsed = seconds_since(start);

  std::vector<int> owner(d.size(), 0);
  for (const PointSet& c : r.clusters)
    for (PointId id : c) ++owner[id];
  for (PointId id : r.noise) ++owner[id];
  const bool covered = std::all_of(owner.begin(), owner.end(), [](int x) { return x == 1; });

  o.note("clusters=" + std::to_string(r.clusters.size()) + " iterations=" + std::to_string(r.trace.size()) +
         " termination=" + std::string(to_string(r.termination)) + " time=" + fmt(elapsed, 3) + "s");
  o.require(r.trace.size() <= p.max_iters, "trace length <= max_iters");
  o.require(covered, "clusters and noise partition the ids");
  o.require(r.clusters.size() <= p.k, "at most k clusters");
  o.require(is_valid_labeling(r.to_labeling(), d.size()), "valid labeling");
  o.require(elapsed < 5.0, "runtime < 5 s");
  return o;
}

// C11: ARI equals the pair-enumeration oracle.
Outcome ari_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1111);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<int> a(n), b(n);
    const int ka = 1 + static_cast<int>(rng() % n);
    const int kb = 1 + static_cast<int>(rng() % n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<int>(rng() % (ka + 1)) - 1;
      b[i] = static_cast<int>(rng() % (kb + 1)) - 1;
    }
    worst = std::max(worst, std::abs(adjusted_rand_index(a, b) - oracle::pair_ari(a, b)));
  }
  o.note("1000 cases, max |diff|=" + fmt(worst, 17));
  o.require(worst <= 1e-12, "max difference <= 1e-12");
  return o;
}

// C12: compare is byte-deterministic.
Outcome end_to_end_determinism() {
  Outcome o;
  const fs::path a = scratch_dir("c12a");
  const fs::path b = scratch_dir("c12b");
  o.require(cli({"compare", "--scenario", "three_varying", "--seed", "7", "--out-dir", a.string()}) == 0, "first run");
  o.require(cli({"compare", "--scenario", "three_varying", "--seed", "7", "--out-dir", b.string()}) == 0, "second run");
  std::size_t files = 0;
  bool has_csv = false, has_svg = false, has_manifest = false;
  for (const auto& entry : fs::directory_iterator(a)) {
    const std::string name = entry.path().filename().string();
    has_csv |= entry.path().extension() == ".csv";
    has_svg |= entry.path().extension() == ".svg";
    has_manifest |= name.find("manifest") != std::string::npos;
    o.require(fs::exists(b / name) && read_text_file(entry.path()) == read_text_file(b / name), name + " identical");
    ++files;
  }
  o.note(std::to_string(files) + " files compared");
  o.require(has_csv && has_svg && has_manifest, "CSV, SVG and manifest outputs present");
  fs::remove_all(a);
  fs::remove_all(b);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<AdaptiveRun> runs;
  const std::vector<Criterion> criteria = {
      {"C1  equal-density baseline (two_equal, eps 0.5, min_pts 10)", equal_density_baseline},
      {"C2  DBSCAN collapses on three_varying", [] { return dbscan_fails_on_varying("three_varying", 1000, 4); }},
      {"C3  DBSCAN collapses on four_varying", [] { return dbscan_fails_on_varying("four_varying", 2, 0); }},
      {"C4  ADBSCAN recovers all clusters",
       [&] {
         runs = adaptive_runs();
         return adbscan_succeeds(runs);
       }},
      {"C5  densest cluster first, eps nondecreasing", [&] { return density_ordering(runs); }},
      {"C6  range query oracle equivalence", oracle_equivalence},
      {"C7  order invariance of cores", order_invariance},
      {"C8  density-connectivity soundness", definition_soundness},
      {"C9  eps monotonicity of the core set", eps_monotonicity},
      {"C10 termination on uniform noise", termination},
      {"C11 ARI pair-enumeration equivalence", ari_equivalence},
      {"C12 end-to-end determinism of compare", end_to_end_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("[%s] %s :: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
