#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "credcycle/config.hpp"
#include "credcycle/engine.hpp"

namespace credcycle {

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_format(const std::string& s);

// One completed run on disk: per-path records, summary statistics, and a
// manifest that reproduces the run exactly.
struct OutputBundle {
  std::string name;
  std::filesystem::path dir;
  RunSummary summary;
};

/// Per-path records as CSV text (header row; %.17g numbers, so repeated
/// runs are byte-identical).
std::string paths_csv(const std::vector<PathResult>& paths);

std::string summary_json(const std::string& name, const RunSummary& summary);

/// Runs the scenario and writes paths.csv, summary.json, and manifest.cfg
/// under out_dir/<name>-seed<seed>/.
OutputBundle write_bundle(const std::string& name, const ScenarioConfig& cfg,
                          std::uint64_t n_paths, std::uint64_t seed,
                          const std::filesystem::path& out_dir);

/// Reads summary.json back from a bundle directory.
OutputBundle read_bundle(const std::filesystem::path& dir);

/// Aligned comparison table over bundles, one row per scenario.
std::string report_table(const std::vector<OutputBundle>& bundles);
std::string report_json(const std::vector<OutputBundle>& bundles);
std::string report_csv(const std::vector<OutputBundle>& bundles);

std::string summary_table(const std::string& name, const RunSummary& s);

}  // namespace credcycle
