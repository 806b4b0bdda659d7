// Scenario runner for the three-period bank-credit model: run presets or
// config files, sweep parameters, and compare finished runs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "credcycle/config.hpp"
#include "credcycle/engine.hpp"
#include "credcycle/presets.hpp"
#include "credcycle/runio.hpp"

namespace {

using namespace credcycle;

struct CommonOpts {
  std::string preset;
  std::string config_path;
  std::vector<std::string> sets;
  std::uint64_t paths = 1000;
  std::uint64_t seed = 42;
  bool paths_given = false;
  bool seed_given = false;
};

RunSpec resolve_spec(const CommonOpts& o) {
  RunSpec spec;
  if (!o.preset.empty() && !o.config_path.empty())
    throw ValidationError("--preset and --config are mutually exclusive");
  if (!o.preset.empty())
    spec.config = preset_config(o.preset);
  else if (!o.config_path.empty())
    spec = parse_config_file(o.config_path);
  for (const auto& kv : o.sets) apply_override(spec, kv);
  validate_config(spec.config);
  return spec;
}

std::string run_name(const CommonOpts& o) {
  if (!o.preset.empty()) return o.preset;
  if (!o.config_path.empty())
    return std::filesystem::path(o.config_path).stem().string();
  return "custom";
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "Scenario preset name");
  cmd->add_option("--config", o.config_path, "Scenario config file");
  cmd->add_option("--set", o.sets, "Override key=value (repeatable)");
  cmd->add_option("--paths", o.paths, "Number of Monte-Carlo paths")
      ->each([&](const std::string&) { o.paths_given = true; });
  cmd->add_option("--seed", o.seed, "Master RNG seed")
      ->each([&](const std::string&) { o.seed_given = true; });
}

int cmd_run(const CommonOpts& o, const std::string& out_dir,
            const std::string& format) {
  RunSpec spec = resolve_spec(o);
  std::uint64_t seed = o.seed_given ? o.seed : spec.seed.value_or(o.seed);
  std::uint64_t paths = o.paths_given ? o.paths : spec.paths.value_or(o.paths);
  OutputBundle bundle =
      write_bundle(run_name(o), spec.config, paths, seed, out_dir);
  switch (parse_format(format)) {
    case OutputFormat::Table:
      std::cout << summary_table(bundle.name, bundle.summary);
      break;
    case OutputFormat::Json:
      std::cout << summary_json(bundle.name, bundle.summary);
      break;
    case OutputFormat::Csv:
      std::cout << report_csv({bundle});
      break;
  }
  std::cout << "results written to " << bundle.dir.string() << "\n";
  return 0;
}

struct SweepAxis {
  std::string key;
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

SweepAxis parse_axis(const std::string& s) {
  auto eq = s.find('=');
  auto c1 = s.find(':', eq);
  auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos ||
      c2 == std::string::npos)
    throw ValidationError("sweep axis must be key=lo:hi:steps, got '" + s +
                          "'");
  SweepAxis a;
  a.key = s.substr(0, eq);
  a.lo = std::stod(s.substr(eq + 1, c1 - eq - 1));
  a.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  a.steps = std::stoi(s.substr(c2 + 1));
  if (a.steps < 1) throw ValidationError("sweep steps must be >= 1");
  return a;
}

std::vector<double> axis_values(const SweepAxis& a) {
  std::vector<double> v;
  for (int i = 0; i < a.steps; ++i) {
    double t = a.steps == 1 ? 0.0
                            : static_cast<double>(i) /
                                  static_cast<double>(a.steps - 1);
    v.push_back(a.lo + t * (a.hi - a.lo));
  }
  return v;
}

int cmd_sweep(const CommonOpts& o, const std::vector<std::string>& axes_raw,
              const std::string& out_dir, const std::string& format) {
  if (axes_raw.empty() || axes_raw.size() > 2)
    throw ValidationError("sweep needs one or two --param axes");
  RunSpec base = resolve_spec(o);
  std::uint64_t seed = o.seed_given ? o.seed : base.seed.value_or(o.seed);
  std::uint64_t paths = o.paths_given ? o.paths : base.paths.value_or(o.paths);

  std::vector<SweepAxis> axes;
  for (const auto& s : axes_raw) axes.push_back(parse_axis(s));

  std::vector<std::vector<double>> grids;
  for (const auto& a : axes) grids.push_back(axis_values(a));

  std::vector<OutputBundle> rows;
  auto run_point = [&](const std::vector<double>& point) {
    RunSpec spec = base;
    std::string id;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%s=%.6g", axes[i].key.c_str(),
                    point[i]);
      apply_override(spec, buf);
      if (!id.empty()) id += ",";
      id += buf;
    }
    validate_config(spec.config);
    OutputBundle b;
    b.name = id;
    b.summary = run_monte_carlo(spec.config, paths, seed);
    rows.push_back(std::move(b));
  };

  if (axes.size() == 1) {
    for (double v : grids[0]) run_point({v});
  } else {
    for (double v0 : grids[0])
      for (double v1 : grids[1]) run_point({v0, v1});
  }

  switch (parse_format(format)) {
    case OutputFormat::Table: std::cout << report_table(rows); break;
    case OutputFormat::Json: std::cout << report_json(rows); break;
    case OutputFormat::Csv: std::cout << report_csv(rows); break;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    auto p = std::filesystem::path(out_dir) / "sweep.csv";
    std::ofstream f(p, std::ios::binary);
    if (!f) throw IoError("cannot write " + p.string());
    f << report_csv(rows);
    std::cout << "sweep written to " << p.string() << "\n";
  }
  return 0;
}

int cmd_report(const std::vector<std::string>& dirs,
               const std::string& format) {
  std::vector<OutputBundle> bundles;
  for (const auto& d : dirs) bundles.push_back(read_bundle(d));
  switch (parse_format(format)) {
    case OutputFormat::Table: std::cout << report_table(bundles); break;
    case OutputFormat::Json: std::cout << report_json(bundles); break;
    case OutputFormat::Csv: std::cout << report_csv(bundles); break;
  }
  return 0;
}

int cmd_list_presets() {
  for (const auto& p : preset_list())
    std::printf("%-22s %s\n", p.name.c_str(), p.description.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-period bank credit cycle simulator"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  std::string run_out = "out";
  std::string run_format = "table";
  auto* run = app.add_subcommand("run", "Run one scenario");
  add_common(run, run_opts);
  run->add_option("--out", run_out, "Output directory");
  run->add_option("--format", run_format, "Output format: csv, json, table");

  CommonOpts sweep_opts;
  std::vector<std::string> sweep_axes;
  std::string sweep_out;
  std::string sweep_format = "table";
  auto* sweep = app.add_subcommand("sweep", "Grid over one or two parameters");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", sweep_axes,
                    "Axis key=lo:hi:steps (max two)");
  sweep->add_option("--out", sweep_out, "Directory for sweep.csv");
  sweep->add_option("--format", sweep_format,
                    "Output format: csv, json, table");

  std::vector<std::string> report_dirs;
  std::string report_format = "table";
  auto* report = app.add_subcommand("report", "Compare finished runs");
  report->add_option("dirs", report_dirs, "Bundle directories")->required();
  report->add_option("--format", report_format,
                     "Output format: csv, json, table");

  app.add_subcommand("list-presets", "List scenario presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts, run_out, run_format);
    if (sweep->parsed())
      return cmd_sweep(sweep_opts, sweep_axes, sweep_out, sweep_format);
    if (report->parsed()) return cmd_report(report_dirs, report_format);
    return cmd_list_presets();
  } catch (const credcycle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
