#include "varden/manifest.hpp"

#include <bit>
#include <cstdio>
#include <cstring>

#include "varden/error.hpp"
#include "varden/numfmt.hpp"

namespace varden {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

void check_token(std::string_view value, std::string_view what) {
  if (value.find('\n') != std::string_view::npos || value.find('\r') != std::string_view::npos ||
      trim(value) != value) {
    throw Error(Errc::InvalidParams, std::string(what) + " must be a single line without surrounding whitespace");
  }
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  for (;;) {
    const std::size_t pos = text.find(sep);
    out.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

RunTrace trace_of(const AdaptiveResult& result) {
  RunTrace t;
  t.iterations = result.trace;
  t.termination = result.termination;
  for (const IterationRecord& r : result.trace) {
    if (r.accepted) t.acceptance_eps.push_back(r.eps);
  }
  return t;
}

std::map<std::string, std::string> param_record(const DbscanParams& params) {
  return {{"eps", format_double(params.eps)}, {"min_pts", std::to_string(params.min_pts)}};
}

std::map<std::string, std::string> param_record(const AdbscanParams& params) {
  return {
      {"eps0", format_double(params.eps0)},
      {"min_pts0", format_double(params.min_pts0)},
      {"eps_step", format_double(params.eps_step)},
      {"min_pts_step", format_double(params.min_pts_step)},
      {"accept_fraction", format_double(params.accept_fraction)},
      {"residual_fraction", format_double(params.residual_fraction)},
      {"k", std::to_string(params.k)},
      {"eps_cap", params.eps_cap ? format_double(*params.eps_cap) : std::string("diameter")},
      {"max_iters", std::to_string(params.max_iters)},
  };
}

std::uint64_t dataset_hash(const Dataset& d) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, d.size());
  fnv_mix(h, d.dimension());
  for (const Point& p : d.points) {
    for (double c : p.coords()) fnv_mix(h, std::bit_cast<std::uint64_t>(c));
  }
  if (d.truth) {
    for (int t : *d.truth) fnv_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(t)));
  }
  return h;
}

std::string format_manifest(const RunManifest& m) {
  check_token(m.command, "command");
  check_token(m.tool_version, "tool_version");
  std::string out = "# varden run manifest\n";
  auto line = [&out](std::string_view key, std::string_view value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  line("tool_version", m.tool_version);
  line("command", m.command);
  line("dataset_hash", hex16(m.dataset_hash));
  for (const auto& [name, value] : m.params) {
    check_token(name, "parameter name");
    check_token(value, "parameter value");
    if (name.empty() || name.find('=') != std::string::npos) {
      throw Error(Errc::InvalidParams, "parameter name '" + name + "' is not a valid key");
    }
    line("param." + name, value);
  }
  if (m.trace) {
    line("trace.termination", to_string(m.trace->termination));
    line("trace.iterations", std::to_string(m.trace->iterations.size()));
    for (const IterationRecord& r : m.trace->iterations) {
      line("trace." + std::to_string(r.iter), format_double(r.eps) + ',' + std::to_string(r.min_pts_effective) + ',' +
                                                  format_double(r.recognized_fraction) + ',' +
                                                  (r.accepted ? "1" : "0") + ',' + std::to_string(r.remaining));
    }
    std::string accepted;
    for (std::size_t i = 0; i < m.trace->acceptance_eps.size(); ++i) {
      if (i > 0) accepted += ';';
      accepted += format_double(m.trace->acceptance_eps[i]);
    }
    line("trace.acceptance_eps", accepted);
  }
  if (m.report) {
    line("report.num_clusters_found", std::to_string(m.report->num_clusters_found));
    line("report.ari", format_double(m.report->ari));
    line("report.noise_fraction", format_double(m.report->noise_fraction));
    std::string purity;
    for (std::size_t i = 0; i < m.report->per_cluster_purity.size(); ++i) {
      if (i > 0) purity += ';';
      purity += format_double(m.report->per_cluster_purity[i]);
    }
    line("report.per_cluster_purity", purity);
  }
  return out;
}

RunManifest parse_manifest(std::string_view text) {
  RunManifest m;
  m.tool_version.clear();
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_iterations;

  auto ensure_trace = [&]() -> RunTrace& {
    if (!m.trace) m.trace.emplace();
    return *m.trace;
  };
  auto ensure_report = [&]() -> EvalReport& {
    if (!m.report) m.report.emplace();
    return *m.report;
  };

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    auto fail = [&](const std::string& msg) {
      throw Error(Errc::ParseError, "manifest line " + std::to_string(line_no) + ": " + msg, line_no, 1);
    };
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string_view key = trim(stripped.substr(0, eq));
    const std::string_view value = trim(stripped.substr(eq + 1));
    auto real = [&](std::string_view s) {
      const auto v = parse_double(s);
      if (!v) fail("'" + std::string(s) + "' is not a number");
      return *v;
    };
    auto count = [&](std::string_view s) {
      const auto v = parse_uint(s);
      if (!v) fail("'" + std::string(s) + "' is not a count");
      return static_cast<std::size_t>(*v);
    };
    auto reals = [&](std::string_view s) {
      std::vector<double> out;
      for (std::string_view part : split(s, ';')) out.push_back(real(part));
      return out;
    };

    if (key == "tool_version") {
      m.tool_version = value;
    } else if (key == "command") {
      m.command = value;
    } else if (key == "dataset_hash") {
      std::uint64_t h = 0;
      if (value.size() != 16) fail("dataset_hash must be 16 hex digits");
      for (char c : value) {
        int digit = -1;
        if (c >= '0' && c <= '9') digit = c - '0';
        if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        if (digit < 0) fail("dataset_hash must be lowercase hex");
        h = (h << 4) | static_cast<std::uint64_t>(digit);
      }
      m.dataset_hash = h;
    } else if (key.starts_with("param.")) {
      m.params[std::string(key.substr(6))] = value;
    } else if (key == "trace.termination") {
      const auto t = termination_from_string(value);
      if (!t) fail("unknown termination '" + std::string(value) + "'");
      ensure_trace().termination = *t;
    } else if (key == "trace.iterations") {
      declared_iterations = count(value);
      ensure_trace();
    } else if (key == "trace.acceptance_eps") {
      ensure_trace().acceptance_eps = reals(value);
    } else if (key.starts_with("trace.")) {
      const auto fields = split(value, ',');
      if (fields.size() != 5) fail("trace rows hold eps,min_pts,recognized,accepted,remaining");
      IterationRecord r;
      r.iter = count(key.substr(6));
      r.eps = real(fields[0]);
      r.min_pts_effective = count(fields[1]);
      r.recognized_fraction = real(fields[2]);
      if (fields[3] != "0" && fields[3] != "1") fail("accepted flag must be 0 or 1");
      r.accepted = fields[3] == "1";
      r.remaining = count(fields[4]);
      ensure_trace().iterations.push_back(r);
    } else if (key == "report.num_clusters_found") {
      ensure_report().num_clusters_found = count(value);
    } else if (key == "report.ari") {
      ensure_report().ari = real(value);
    } else if (key == "report.noise_fraction") {
      ensure_report().noise_fraction = real(value);
    } else if (key == "report.per_cluster_purity") {
      ensure_report().per_cluster_purity = reals(value);
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (declared_iterations && m.trace->iterations.size() != *declared_iterations) {
    throw Error(Errc::ParseError, "manifest trace row count does not match trace.iterations", line_no, 1);
  }
  return m;
}

}  // namespace varden
