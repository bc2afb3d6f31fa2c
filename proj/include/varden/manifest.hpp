#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varden/metrics.hpp"
#include "varden/model.hpp"

namespace varden {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunTrace {
  std::vector<IterationRecord> iterations;
  Termination termination = Termination::ClustersFound;
  std::vector<double> acceptance_eps;  // eps of each accepted iteration, in order

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

RunTrace trace_of(const AdaptiveResult& result);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> params;
  std::uint64_t dataset_hash = 0;
  std::optional<RunTrace> trace;
  std::optional<EvalReport> report;
  std::string tool_version{kToolVersion};

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

// Flat parameter records for the manifest; an unset eps_cap reads "diameter".
std::map<std::string, std::string> param_record(const DbscanParams& params);
std::map<std::string, std::string> param_record(const AdbscanParams& params);

// FNV-1a 64 over the point count, dimension, each coordinate's IEEE-754 bit
// pattern (little-endian), and the truth labels when present.
std::uint64_t dataset_hash(const Dataset& d);

// One `key = value` per line, keys in a fixed order:
//   tool_version, command, dataset_hash (16 hex digits), param.<name> (sorted),
//   trace.termination, trace.iterations, trace.<i> = eps,min_pts,recognized,accepted,remaining,
//   report.num_clusters_found, report.ari, report.noise_fraction,
//   report.per_cluster_purity (';'-joined).
// Lines starting with '#' are comments. Command, param names and values must
// be single-line, with no surrounding whitespace; names may not contain '='.
std::string format_manifest(const RunManifest& manifest);
RunManifest parse_manifest(std::string_view text);

}  // namespace varden
