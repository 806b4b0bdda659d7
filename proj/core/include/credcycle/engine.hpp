#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "credcycle/bank.hpp"
#include "credcycle/instruments.hpp"
#include "credcycle/market.hpp"
#include "credcycle/strategy.hpp"

namespace credcycle {

enum class Distribution { Normal, Uniform, TwoPoint };

// Sentiment level psi_1 is known at t=1; only the increment to psi_2 is
// random (symmetric, zero mean, volatility sigma). psi2_override pins the
// second-period level for deterministic scenario presets.
struct SentimentState {
  double psi1 = 0.0;
  double sigma = 0.1;
  Distribution dist = Distribution::Normal;
  std::optional<double> psi2_override;
};

struct ModeFlags {
  bool leverage = false;
  bool securitization = true;
  bool cds = false;
  bool naked_cds = false;
  bool foresight = false;
  SettleMode settlement = SettleMode::Expectation;
  IndifferencePolicy policy = IndifferencePolicy::EvenSplit;
};

struct ScenarioConfig {
  Project project;
  FeeModel fee_model;
  SkinModel skin_model;
  CdsTerms cds_terms;  // market_spread derived: theta*lgd + shock
  RegulatoryParams regulatory;
  SentimentState sentiment;
  double e0 = 1.0;
  ModeFlags flags;
  double cds_mispricing_shock = 0.0;
  double eps_price = 1e-9;
};

/// Throws ValidationError naming the violated invariant.
void validate_config(const ScenarioConfig& c);

struct PathResult {
  double x = 0.0;
  double cyclicity = 0.0;
  double projects_t1 = 0.0;
  double projects_t2 = 0.0;
  double output_proxy = 0.0;
  double price_t1 = 0.0;
  double price_t2 = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
  double liquidation = 0.0;
  double final_equity = 0.0;
  double dividends = 0.0;
  double bonuses = 0.0;
  double retained = 0.0;
  double settlement_pnl = 0.0;
  double cds_sold = 0.0;
  double cds_bought = 0.0;
  std::vector<Action> actions_t1;
  std::vector<Action> actions_t2;
  bool insolvent = false;
  bool wipeout = false;
  bool negative_price = false;
};

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;
  double q05 = 0.0;
  double q50 = 0.0;
  double q95 = 0.0;
};

struct RunSummary {
  std::uint64_t n_paths = 0;
  std::uint64_t seed = 0;
  // insertion-ordered metric names for stable output
  std::vector<std::string> metric_names;
  std::map<std::string, MetricStats> metrics;
};

/// One three-period path: clear at psi_1, allocate and trade; draw psi_2,
/// liquidate under the haircut covenant if levered and the price fell,
/// trade again; settle everything at t=3. Flagged outcomes (wipeout,
/// insolvency, negative price) land in the result, not as exceptions.
PathResult run_path(const ScenarioConfig& config, std::mt19937_64& rng);

/// n_paths independent paths on per-path streams derived from seed.
/// Identical (config, seed, n_paths) gives an identical summary.
RunSummary run_monte_carlo(const ScenarioConfig& config,
                           std::uint64_t n_paths, std::uint64_t seed);

const std::vector<std::string>& path_metric_names();
double path_metric(const PathResult& r, const std::string& name);

struct ScenarioRow {
  std::string id;
  RunSummary summary;
};

/// Paired comparison: every scenario runs on the same seed.
std::vector<ScenarioRow> compare_scenarios(
    const std::vector<std::pair<std::string, ScenarioConfig>>& configs,
    std::uint64_t n_paths, std::uint64_t seed);

}  // namespace credcycle
