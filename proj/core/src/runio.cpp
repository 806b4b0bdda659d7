#include "credcycle/runio.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "credcycle/rng.hpp"

namespace credcycle {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string actions_field(const std::vector<Action>& t1,
                          const std::vector<Action>& t2) {
  std::string out;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (!out.empty()) out += '+';
    out += to_string(t1[i]);
  }
  out += '|';
  bool first = true;
  for (const auto& a : t2) {
    if (!first) out += '+';
    out += to_string(a);
    first = false;
  }
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out) throw IoError("write failed: " + p.string());
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "table") return OutputFormat::Table;
  throw ValidationError("unknown format: " + s);
}

std::string paths_csv(const std::vector<PathResult>& paths) {
  std::ostringstream out;
  out << "path";
  for (const auto& name : path_metric_names()) out << ',' << name;
  out << ",actions\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out << i;
    for (const auto& name : path_metric_names())
      out << ',' << num(path_metric(paths[i], name));
    out << ',' << actions_field(paths[i].actions_t1, paths[i].actions_t2)
        << '\n';
  }
  return out.str();
}

std::string summary_json(const std::string& name, const RunSummary& s) {
  ordered_json j;
  j["scenario"] = name;
  j["n_paths"] = s.n_paths;
  j["seed"] = s.seed;
  ordered_json metrics;
  for (const auto& m : s.metric_names) {
    const MetricStats& st = s.metrics.at(m);
    metrics[m] = {{"mean", st.mean},
                  {"stddev", st.stddev},
                  {"q05", st.q05},
                  {"q50", st.q50},
                  {"q95", st.q95}};
  }
  j["metrics"] = metrics;
  return j.dump(2) + "\n";
}

OutputBundle write_bundle(const std::string& name, const ScenarioConfig& cfg,
                          std::uint64_t n_paths, std::uint64_t seed,
                          const std::filesystem::path& out_dir) {
  validate_config(cfg);

  std::vector<PathResult> paths;
  paths.reserve(n_paths);
  for (std::uint64_t i = 0; i < n_paths; ++i) {
    auto rng = path_rng(seed, i);
    paths.push_back(run_path(cfg, rng));
  }

  RunSummary summary = run_monte_carlo(cfg, n_paths, seed);

  OutputBundle bundle;
  bundle.name = name;
  bundle.dir = out_dir / (name + "-seed" + std::to_string(seed));
  bundle.summary = summary;

  std::error_code ec;
  std::filesystem::create_directories(bundle.dir, ec);
  if (ec) throw IoError("cannot create " + bundle.dir.string());

  write_file(bundle.dir / "paths.csv", paths_csv(paths));
  write_file(bundle.dir / "summary.json", summary_json(name, summary));
  std::string manifest = emit_config(cfg);
  manifest += "seed=" + std::to_string(seed) + "\n";
  manifest += "paths=" + std::to_string(n_paths) + "\n";
  write_file(bundle.dir / "manifest.cfg", manifest);
  return bundle;
}

OutputBundle read_bundle(const std::filesystem::path& dir) {
  auto file = dir / "summary.json";
  std::ifstream in(file);
  if (!in) throw IoError("missing file: " + file.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("malformed summary: " + file.string() + ": " + e.what());
  }
  OutputBundle b;
  b.dir = dir;
  b.name = j.value("scenario", dir.filename().string());
  b.summary.n_paths = j.at("n_paths").get<std::uint64_t>();
  b.summary.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [key, st] : j.at("metrics").items()) {
    b.summary.metric_names.push_back(key);
    MetricStats ms;
    ms.mean = st.at("mean").get<double>();
    ms.stddev = st.at("stddev").get<double>();
    ms.q05 = st.at("q05").get<double>();
    ms.q50 = st.at("q50").get<double>();
    ms.q95 = st.at("q95").get<double>();
    b.summary.metrics[key] = ms;
  }
  return b;
}

namespace {

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "x",        "cyclicity",  "projects",     "output_proxy",
      "final_equity", "liquidation", "cds_sold", "cds_bought"};
  return cols;
}

std::string fmt_cell(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

}  // namespace

std::string report_table(const std::vector<OutputBundle>& bundles) {
  std::vector<std::string> header = {"scenario"};
  for (const auto& c : report_columns()) header.push_back(c);

  std::vector<std::vector<std::string>> rows;
  for (const auto& b : bundles) {
    std::vector<std::string> row = {b.name};
    for (const auto& c : report_columns()) {
      auto it = b.summary.metrics.find(c);
      row.push_back(it != b.summary.metrics.end() ? fmt_cell(it->second.mean)
                                                  : "-");
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "  " : "") << std::setw(static_cast<int>(widths[i]))
          << (i == 0 ? std::left : std::right) << row[i]
          << std::right;
    out << '\n';
  };
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return out.str();
}

std::string report_json(const std::vector<OutputBundle>& bundles) {
  ordered_json j = ordered_json::array();
  for (const auto& b : bundles) {
    ordered_json row;
    row["scenario"] = b.name;
    for (const auto& c : report_columns()) {
      auto it = b.summary.metrics.find(c);
      if (it != b.summary.metrics.end()) row[c] = it->second.mean;
    }
    j.push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const std::vector<OutputBundle>& bundles) {
  std::ostringstream out;
  out << "scenario";
  for (const auto& c : report_columns()) out << ',' << c;
  out << '\n';
  for (const auto& b : bundles) {
    out << b.name;
    for (const auto& c : report_columns()) {
      auto it = b.summary.metrics.find(c);
      out << ',' << (it != b.summary.metrics.end() ? num(it->second.mean) : "");
    }
    out << '\n';
  }
  return out.str();
}

std::string summary_table(const std::string& name, const RunSummary& s) {
  std::ostringstream out;
  out << "scenario: " << name << "  paths: " << s.n_paths
      << "  seed: " << s.seed << "\n";
  out << std::left << std::setw(16) << "metric" << std::right
      << std::setw(12) << "mean" << std::setw(12) << "stddev" << std::setw(12)
      << "q05" << std::setw(12) << "q50" << std::setw(12) << "q95" << "\n";
  for (const auto& m : s.metric_names) {
    const MetricStats& st = s.metrics.at(m);
    out << std::left << std::setw(16) << m << std::right << std::setw(12)
        << fmt_cell(st.mean) << std::setw(12) << fmt_cell(st.stddev)
        << std::setw(12) << fmt_cell(st.q05) << std::setw(12)
        << fmt_cell(st.q50) << std::setw(12) << fmt_cell(st.q95) << "\n";
  }
  return out.str();
}

}  // namespace credcycle
