#include "credcycle/presets.hpp"

namespace credcycle {

namespace {

ScenarioConfig defaults() { return ScenarioConfig{}; }

ScenarioConfig quiet() {
  ScenarioConfig c = defaults();
  c.sentiment.sigma = 0.0;
  return c;
}

}  // namespace

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> presets = {
      {"baseline",
       "traditional lending only, fair prices, even split across periods"},
      {"securitization-fair",
       "securitization at fair prices: more projects, same stability"},
      {"overpricing-t1",
       "securitized assets overpriced in period 1: originate-to-distribute "
       "everything up front (x=1)"},
      {"overpricing-t2",
       "overpricing arrives in period 2: held loans are securitized and "
       "sold then"},
      {"overpricing-both",
       "overpricing in both periods with perfect foresight: all activity "
       "in the richer period"},
      {"underpricing-t1",
       "underpricing in period 1: no sales, lending continues"},
      {"underpricing-t2-a",
       "underpricing in period 2, all capital lent in period 1"},
      {"underpricing-t2-b",
       "underpricing in period 2, reserves kept and spent on distressed "
       "securities"},
      {"underpricing-t2-c",
       "underpricing in period 2, all lending deferred to period 2"},
      {"underpricing-both-a",
       "underpricing in both periods, front-loaded lending"},
      {"underpricing-both-b",
       "underpricing in both periods, reserves split across periods"},
      {"underpricing-both-c",
       "underpricing in both periods, back-loaded lending"},
      {"boom-bust",
       "overpricing then underpricing: full origination and sales in "
       "period 1, credit crunch in period 2"},
      {"leverage-firesale",
       "levered securitization hit by a period-2 price fall: forced "
       "collateral sales"},
      {"cds-fair", "fairly priced protection: indifference, lending wins ties"},
      {"cds-positive-basis",
       "spread above the loan fee: selling protection displaces lending"},
      {"cds-negative-basis",
       "spread below the loan fee: buying underpriced protection displaces "
       "lending"},
      {"naked-cds-stress",
       "high default risk plus deeply negative basis: all-in speculative "
       "protection buying"},
      {"hedge-vs-securitize",
       "held loans meet period-2 overpricing: hedge with protection or "
       "sell, per the retention-adjusted comparison"},
  };
  return presets;
}

ScenarioConfig preset_config(const std::string& name) {
  if (name == "baseline") {
    ScenarioConfig c = quiet();
    c.flags.securitization = false;
    return c;
  }
  if (name == "securitization-fair") return quiet();
  if (name == "overpricing-t1") {
    ScenarioConfig c = quiet();
    c.sentiment.psi1 = -0.85;
    return c;
  }
  if (name == "overpricing-t2") {
    ScenarioConfig c = defaults();
    c.sentiment.psi2_override = -0.85;
    return c;
  }
  if (name == "overpricing-both") {
    ScenarioConfig c = defaults();
    c.sentiment.psi1 = -0.85;
    c.sentiment.psi2_override = -0.9;
    c.flags.foresight = true;
    return c;
  }
  if (name == "underpricing-t1") {
    ScenarioConfig c = quiet();
    c.sentiment.psi1 = 0.3;
    return c;
  }
  if (name == "underpricing-t2-a" || name == "underpricing-t2-b" ||
      name == "underpricing-t2-c") {
    ScenarioConfig c = defaults();
    c.sentiment.psi2_override = 0.3;
    c.flags.policy = name.back() == 'a' ? IndifferencePolicy::FrontLoad
                     : name.back() == 'b' ? IndifferencePolicy::EvenSplit
                                          : IndifferencePolicy::BackLoad;
    return c;
  }
  if (name == "underpricing-both-a" || name == "underpricing-both-b" ||
      name == "underpricing-both-c") {
    ScenarioConfig c = defaults();
    c.sentiment.psi1 = 0.3;
    c.sentiment.psi2_override = 0.3;
    c.flags.policy = name.back() == 'a' ? IndifferencePolicy::FrontLoad
                     : name.back() == 'b' ? IndifferencePolicy::EvenSplit
                                          : IndifferencePolicy::BackLoad;
    return c;
  }
  if (name == "boom-bust") {
    ScenarioConfig c = defaults();
    c.sentiment.psi1 = -0.85;
    c.sentiment.psi2_override = 0.3;
    return c;
  }
  if (name == "leverage-firesale") {
    ScenarioConfig c = defaults();
    c.project.theta = 0.1;
    c.skin_model.d0 = 0.15;  // d(0.1) = 0.2
    c.flags.leverage = true;
    c.sentiment.psi2_override = 0.2;
    return c;
  }
  if (name == "cds-fair") {
    ScenarioConfig c = defaults();
    c.flags.cds = true;
    return c;
  }
  if (name == "cds-positive-basis") {
    ScenarioConfig c = defaults();
    c.flags.cds = true;
    c.cds_mispricing_shock = 0.05;
    return c;
  }
  if (name == "cds-negative-basis") {
    ScenarioConfig c = defaults();
    c.flags.cds = true;
    c.flags.naked_cds = true;
    c.cds_mispricing_shock = -0.1;
    return c;
  }
  if (name == "naked-cds-stress") {
    ScenarioConfig c = defaults();
    c.project.theta = 0.6;
    c.flags.cds = true;
    c.flags.naked_cds = true;
    c.cds_mispricing_shock = -0.2;
    return c;
  }
  if (name == "hedge-vs-securitize") {
    ScenarioConfig c = defaults();
    c.flags.cds = true;
    c.skin_model.d0 = 0.0;  // d(0.2) = 0.1
    c.sentiment.psi1 = 0.05;
    c.sentiment.psi2_override = -0.1;
    c.flags.policy = IndifferencePolicy::FrontLoad;
    return c;
  }
  throw ValidationError("unknown preset: " + name);
}

}  // namespace credcycle
