#pragma once

#include <optional>
#include <string>
#include <vector>

#include "credcycle/instruments.hpp"
#include "credcycle/market.hpp"

namespace credcycle {

enum class Action {
  LendHold,
  LendSecuritize,
  LendHedge,
  SellCds,
  BuyNakedCds,
  BuySecuritized,
  HoldCash,
};

const char* to_string(Action a);

// One admissible use of capital. expected_profit is the zero-profit-rule
// net expectation per unit position; gross_yield is the cash income the
// comparative rules rank on (fee vs. premium vs. price gap).
struct StrategyQuote {
  Action action = Action::HoldCash;
  double expected_profit_per_unit_capital = 0.0;
  double gross_yield = 0.0;
  double capital_required = 0.0;
  std::string notes;
};

enum class IndifferencePolicy { EvenSplit, FrontLoad, BackLoad };

struct TradeLeg {
  Action action = Action::HoldCash;
  double size = 0.0;  // fraction of period funds
};

struct AllocationPlan {
  double x = 0.5;  // share of funds deployed at t=1
  std::vector<TradeLeg> plan_t1;
  std::vector<TradeLeg> plan_t2;
  bool foresight = false;
};

/// Origination-and-sale beats the origination cost: P_t - P > 1 - f.
bool securitization_profitable(double cleared_price, double fundamental,
                               double fee);

struct QuoteOptions {
  bool cds_enabled = true;
  bool naked_cds_enabled = true;
  bool securitization_enabled = true;
};

/// Per-unit expected profits of every admissible action at the current
/// market state.
std::vector<StrategyQuote> quote_actions(const MarketState& market,
                                         const Project& p,
                                         const CdsTerms& terms, double fee,
                                         double skin,
                                         const QuoteOptions& opts = {});

/// For a loan already on the books in an overpriced market: keep and
/// hedge when (P2 - P)(1 - d) < 1 - s/w, securitize otherwise. Ties keep
/// the loan and hedge.
Action hedge_or_securitize(double cleared_price, double fundamental,
                           double skin, double spread, double lgd = 1.0);

/// Period allocation under the regime pair. Overpricing that clears the
/// profitability bar forces x to an extreme; otherwise the indifference
/// policy decides.
AllocationPlan choose_allocation(const Regime& regime_t1,
                                 const std::optional<Regime>& regime_t2,
                                 double fee, bool foresight,
                                 IndifferencePolicy policy =
                                     IndifferencePolicy::EvenSplit);

}  // namespace credcycle
