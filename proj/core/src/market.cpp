#include "credcycle/market.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace credcycle {

double noise_trader_demand(double fundamental, double psi,
                           double cleared_price) {
  if (cleared_price == 0.0)
    throw ZeroPrice("noise_trader_demand: cleared price is zero");
  return (fundamental - psi) / cleared_price;
}

double bank_demand(double deployed, double cleared_price) {
  if (cleared_price == 0.0)
    throw ZeroPrice("bank_demand: cleared price is zero");
  return deployed / cleared_price;
}

MarketState clear_market(double fundamental, double psi, double capacity,
                         double inventory) {
  MarketState s;
  s.fundamental = fundamental;
  if (psi > 0.0) {
    // Pessimism: deploy capital, capped at the mispricing magnitude.
    double deployed = std::min(capacity, psi);
    s.deployed_capital = deployed;
    s.cleared_price = fundamental - psi + deployed;
  } else if (psi < 0.0) {
    // Optimism: no shorting, only sales of existing inventory.
    double pre_trade = fundamental - psi;
    double sale = std::min(inventory * pre_trade, -psi);
    s.deployed_capital = -sale;
    s.cleared_price = pre_trade - sale;
  } else {
    s.cleared_price = fundamental;
  }
  if (s.cleared_price < 0.0)
    throw NegativePrice("clear_market: price " +
                        std::to_string(s.cleared_price) +
                        " < 0; shrink psi or raise the fundamental");
  return s;
}

Regime classify_regime(double cleared_price, double fundamental, double eps) {
  if (!(eps > 0.0)) throw ValidationError("classify_regime: eps must be > 0");
  Regime r;
  r.magnitude = std::abs(cleared_price - fundamental);
  if (cleared_price - fundamental > eps)
    r.tag = RegimeTag::Overpriced;
  else if (fundamental - cleared_price > eps)
    r.tag = RegimeTag::Underpriced;
  else
    r.tag = RegimeTag::Fair;
  return r;
}

const char* to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Overpriced: return "overpriced";
    case RegimeTag::Fair: return "fair";
    case RegimeTag::Underpriced: return "underpriced";
  }
  return "?";
}

}  // namespace credcycle
