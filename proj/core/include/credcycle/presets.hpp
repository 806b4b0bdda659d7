#pragma once

#include <string>
#include <vector>

#include "credcycle/engine.hpp"

namespace credcycle {

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_list();

/// Throws ValidationError for unknown names.
ScenarioConfig preset_config(const std::string& name);

}  // namespace credcycle
