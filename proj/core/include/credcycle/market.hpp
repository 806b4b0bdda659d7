#pragma once

#include "credcycle/errors.hpp"

namespace credcycle {

enum class RegimeTag { Overpriced, Fair, Underpriced };

struct Regime {
  RegimeTag tag = RegimeTag::Fair;
  double magnitude = 0.0;  // |P_t - P|
};

// Snapshot of one period's clearing. deployed_capital is signed:
// positive = stabilizing purchases against pessimism, negative =
// inventory sales (proceeds) against optimism.
struct MarketState {
  double fundamental = 0.0;
  double cleared_price = 0.0;
  double deployed_capital = 0.0;
  double supply = 1.0;
};

/// Noise-trader demand at price P_t given signed sentiment psi.
/// psi > 0 is pessimism (demand falls), psi < 0 optimism.
double noise_trader_demand(double fundamental, double psi, double cleared_price);

/// Bank demand from deployed capital at price P_t.
double bank_demand(double deployed, double cleared_price);

/// Clears unit supply. Under pessimism the bank deploys up to
/// min(capacity, psi); under optimism it can only sell existing
/// inventory (no short positions). Bank trading never pushes the price
/// past fundamentals.
MarketState clear_market(double fundamental, double psi, double capacity,
                         double inventory);

Regime classify_regime(double cleared_price, double fundamental,
                       double eps = 1e-9);

const char* to_string(RegimeTag tag);

}  // namespace credcycle
