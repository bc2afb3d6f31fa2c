#include "varden/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "varden/adbscan.hpp"
#include "varden/csv_io.hpp"
#include "varden/dbscan.hpp"
#include "varden/error.hpp"
#include "varden/experiment.hpp"
#include "varden/manifest.hpp"
#include "varden/metrics.hpp"
#include "varden/numfmt.hpp"
#include "varden/svg.hpp"
#include "varden/synthgen.hpp"

namespace varden {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

bool is_usage_error(Errc code) {
  return code == Errc::InvalidParams || code == Errc::NonPositiveEps || code == Errc::UnknownScenario;
}

struct GenArgs {
  std::string scenario;
  std::string spec_file;
  std::uint64_t seed = 1;
  std::string out;
};

struct DbscanArgs {
  std::string in;
  double eps = 0.0;
  std::size_t min_pts = 0;
  std::string out;
  std::string svg;
  std::string report;
};

struct AdbscanArgs {
  std::string in;
  AdbscanParams params;
  double step = 0.5;
  std::optional<double> min_pts_step;
  std::optional<double> eps_cap;
  std::string out;
  std::string svg;
  std::string trace;
};

struct EvalArgs {
  std::string in;
  std::string pred;
  std::string report;
};

struct CompareArgs {
  std::string scenario;
  std::uint64_t seed = 1;
  std::string out_dir;
};

Dataset load_dataset(const std::string& path) { return Dataset(validate_dataset(read_csv(path))); }

int do_gen(const GenArgs& args, bool seed_given, std::ostream& out) {
  ScenarioSpec spec = args.spec_file.empty() ? builtin_scenario(args.scenario) : parse_scenario(read_text_file(args.spec_file));
  if (seed_given || args.spec_file.empty()) spec.seed = args.seed;
  const Dataset d = gen_scenario(spec);
  write_dataset_csv(d, args.out);
  out << "wrote " << d.size() << " points to " << args.out << '\n';
  return kExitOk;
}

int do_dbscan(const DbscanArgs& args, std::ostream& out) {
  const Dataset d = load_dataset(args.in);
  const DbscanParams params{args.eps, args.min_pts};
  const Labeling labeling = run_dbscan(d, params);
  write_csv(d, labeling, args.out);
  if (!args.svg.empty()) render_svg(d, labeling, args.svg);
  if (!args.report.empty()) {
    RunManifest m;
    m.command = "dbscan";
    m.params = param_record(params);
    m.dataset_hash = dataset_hash(d);
    if (d.truth) m.report = evaluate(d, labeling);
    write_text_file(args.report, format_manifest(m));
  }
  out << "clusters=" << labeling.num_clusters << " noise=" << labeling.noise().size() << '\n';
  return kExitOk;
}

int do_adbscan(AdbscanArgs args, std::ostream& out) {
  const Dataset d = load_dataset(args.in);
  args.params.eps_step = args.step;
  args.params.min_pts_step = args.min_pts_step.value_or(args.step);
  args.params.eps_cap = args.eps_cap;
  const AdaptiveResult result = run_adbscan(d, args.params);
  write_csv(d, result, args.out);
  if (!args.svg.empty()) render_svg(d, result, args.svg);
  if (!args.trace.empty()) {
    RunManifest m;
    m.command = "adbscan";
    m.params = param_record(args.params);
    m.dataset_hash = dataset_hash(d);
    m.trace = trace_of(result);
    if (d.truth) m.report = evaluate(d, result);
    write_text_file(args.trace, format_manifest(m));
  }
  out << "clusters=" << result.clusters.size() << " noise=" << result.noise.size()
      << " iterations=" << result.trace.size() << " termination=" << to_string(result.termination) << '\n';
  return kExitOk;
}

int do_eval(const EvalArgs& args, std::ostream& out) {
  const Dataset d = load_dataset(args.in);
  const Labeling predicted = read_labeling_csv(args.pred);
  const EvalReport report = evaluate(d, predicted);
  RunManifest m;
  m.command = "eval";
  m.params = {{"pred", args.pred}};
  m.dataset_hash = dataset_hash(d);
  m.report = report;
  write_text_file(args.report, format_manifest(m));
  out << report_csv_header() << '\n' << report_csv_row(report) << '\n';
  return kExitOk;
}

int do_compare(const CompareArgs& args, std::ostream& out) {
  ScenarioSpec spec = builtin_scenario(args.scenario);
  spec.seed = args.seed;
  const CompareOutcome outcome = run_compare(spec);
  write_compare_outputs(outcome, args.scenario, args.out_dir);
  out << "algorithm," << report_csv_header() << '\n'
      << "dbscan(eps=" << format_double(outcome.dbscan_params.eps) << ")," << report_csv_row(outcome.dbscan_report)
      << '\n'
      << "adbscan(k=" << outcome.adbscan_params.k << ")," << report_csv_row(outcome.adbscan_report) << '\n';
  return kExitOk;
}

std::string first_unknown_flag(const CLI::App& app, const std::vector<std::string>& args) {
  const CLI::App* scope = &app;
  for (const std::string& arg : args) {
    if (arg.rfind("-", 0) != 0) {
      if (scope == &app) {
        for (const CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
          if (sub->get_name() == arg) scope = sub;
        }
      }
      continue;
    }
    const std::string name = arg.substr(0, arg.find('='));
    if (name == "--help" || name == "-h" || name == "--version") continue;
    if (scope->get_option_no_throw(name) == nullptr) return name;
  }
  return {};
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density-based clustering with fixed (DBSCAN) and adaptive (ADBSCAN) parameters", "varden"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  const std::string names = [] {
    std::string s;
    for (const auto& n : scenario_names()) s += (s.empty() ? "" : "|") + n;
    return s;
  }();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded synthetic scenario as CSV");
  auto* gen_scenario_opt = gen_cmd->add_option("--scenario", gen.scenario, "Built-in scenario: " + names);
  auto* gen_spec_opt = gen_cmd->add_option("--spec", gen.spec_file, "Scenario spec file (key = value format)");
  gen_scenario_opt->excludes(gen_spec_opt);
  auto* gen_seed_opt = gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->envname("VARDEN_SEED");
  gen_cmd->add_option("--out", gen.out, "Output CSV")->required();

  DbscanArgs db;
  auto* db_cmd = app.add_subcommand("dbscan", "Run DBSCAN with fixed parameters");
  db_cmd->add_option("--in", db.in, "Input CSV")->required();
  db_cmd->add_option("--eps", db.eps, "Neighborhood radius")->required()->check(CLI::PositiveNumber);
  db_cmd->add_option("--min-pts", db.min_pts, "Minimum neighborhood size, counting the point")
      ->required()
      ->check(CLI::PositiveNumber);
  db_cmd->add_option("--out", db.out, "Labeled output CSV")->required();
  db_cmd->add_option("--svg", db.svg, "Scatter plot output");
  db_cmd->add_option("--report", db.report, "Run manifest output");

  AdbscanArgs ad;
  auto* ad_cmd = app.add_subcommand("adbscan", "Run adaptive DBSCAN");
  ad_cmd->add_option("--in", ad.in, "Input CSV")->required();
  ad_cmd->add_option("--k", ad.params.k, "Number of clusters to extract")->required()->check(CLI::PositiveNumber);
  ad_cmd->add_option("--eps0", ad.params.eps0, "Initial radius")->capture_default_str()->check(CLI::PositiveNumber);
  ad_cmd->add_option("--min-pts0", ad.params.min_pts0, "Initial density threshold (ceil applied)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ad_cmd->add_option("--step", ad.step, "Increment for eps and min-pts per iteration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ad_cmd->add_option("--min-pts-step", ad.min_pts_step, "Separate min-pts increment (default: --step)")
      ->check(CLI::NonNegativeNumber);
  ad_cmd->add_option("--accept", ad.params.accept_fraction, "Acceptance fraction of the dataset")
      ->capture_default_str();
  ad_cmd->add_option("--residual", ad.params.residual_fraction, "Stop once this fraction remains")
      ->capture_default_str();
  ad_cmd->add_option("--eps-cap", ad.eps_cap, "Largest radius tried (default: dataset diameter)")
      ->check(CLI::PositiveNumber);
  ad_cmd->add_option("--max-iters", ad.params.max_iters, "Iteration budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ad_cmd->add_option("--out", ad.out, "Labeled output CSV")->required();
  ad_cmd->add_option("--svg", ad.svg, "Scatter plot output");
  ad_cmd->add_option("--trace", ad.trace, "Run manifest with the iteration trace");

  EvalArgs ev;
  auto* ev_cmd = app.add_subcommand("eval", "Score a labeled CSV against ground truth");
  ev_cmd->add_option("--in", ev.in, "Dataset CSV with truth column")->required();
  ev_cmd->add_option("--pred", ev.pred, "Labeled CSV from dbscan/adbscan")->required();
  ev_cmd->add_option("--report", ev.report, "Run manifest output")->required();

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "DBSCAN vs ADBSCAN on one built-in scenario");
  cmp_cmd->add_option("--scenario", cmp.scenario, "Built-in scenario: " + names)->required();
  cmp_cmd->add_option("--seed", cmp.seed, "PRNG seed")->envname("VARDEN_SEED");
  cmp_cmd->add_option("--out-dir", cmp.out_dir, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // CLI11 reports missing required flags before unknown ones; name the
    // unknown flag first since it is usually the real mistake.
    const std::string unknown = first_unknown_flag(app, args);
    err << "error: " << (unknown.empty() ? std::string(e.what()) : "unknown option " + unknown) << "\n\n";
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitUsage;
  }
  if (*gen_cmd && gen.scenario.empty() == gen.spec_file.empty()) {
    err << "error: gen needs exactly one of --scenario or --spec\n\n" << gen_cmd->help();
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen, gen_seed_opt->count() > 0, out);
    if (*db_cmd) return do_dbscan(db, out);
    if (*ad_cmd) return do_adbscan(ad, out);
    if (*ev_cmd) return do_eval(ev, out);
    if (*cmp_cmd) return do_compare(cmp, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace varden
