#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "credcycle/engine.hpp"

namespace credcycle {

// A parsed run request: the scenario plus optional run controls
// (seed/paths), so a written manifest reproduces the run on its own.
struct RunSpec {
  ScenarioConfig config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> paths;
};

/// Parses flat key=value text. Unknown keys are rejected with the line
/// number; the result is fully validated.
RunSpec parse_config_text(const std::string& text);

RunSpec parse_config_file(const std::filesystem::path& path);

/// Applies one "key=value" override on top of a spec.
void apply_override(RunSpec& spec, const std::string& key_value);

/// Emits the full key=value form; parse(emit(c)) == c.
std::string emit_config(const ScenarioConfig& c);

}  // namespace credcycle
