#include "credcycle/strategy.hpp"

namespace credcycle {

const char* to_string(Action a) {
  switch (a) {
    case Action::LendHold: return "lend-hold";
    case Action::LendSecuritize: return "lend-securitize";
    case Action::LendHedge: return "lend-hedge";
    case Action::SellCds: return "sell-cds";
    case Action::BuyNakedCds: return "buy-naked-cds";
    case Action::BuySecuritized: return "buy-securitized";
    case Action::HoldCash: return "hold-cash";
  }
  return "?";
}

bool securitization_profitable(double cleared_price, double fundamental,
                               double fee) {
  return (cleared_price - fundamental) > (1.0 - fee);
}

std::vector<StrategyQuote> quote_actions(const MarketState& market,
                                         const Project& p,
                                         const CdsTerms& terms, double fee,
                                         double skin,
                                         const QuoteOptions& opts) {
  const double theta = p.theta;
  const double w = terms.lgd;
  const double s = terms.market_spread;
  const double P = market.fundamental;
  const double Pt = market.cleared_price;

  std::vector<StrategyQuote> quotes;
  quotes.push_back({Action::LendHold, fee - theta * w, fee, 1.0,
                    "fee minus expected loan loss"});
  if (opts.securitization_enabled) {
    double per_loan = fee - 1.0 + Pt * (1.0 - skin) + (1.0 - theta) * skin;
    quotes.push_back({Action::LendSecuritize, per_loan,
                      fee + (Pt - P) * (1.0 - skin), skin,
                      "originate, sell 1-d at market, keep skin"});
  }
  if (opts.cds_enabled) {
    quotes.push_back({Action::LendHedge, fee - s, fee - s, 1.0 + s,
                      "hedged loan repays 1 surely"});
    quotes.push_back({Action::SellCds, s - theta * w, s, 1.0,
                      "premium minus expected protection payout"});
    if (opts.naked_cds_enabled) {
      if (s == 0.0)
        throw ZeroSpread("naked CDS sizing undefined at zero spread");
      quotes.push_back({Action::BuyNakedCds, (theta * w - s) / s,
                        (theta * w - s) / s, 1.0,
                        "speculative protection, 1/s contracts per euro"});
    }
  }
  quotes.push_back({Action::BuySecuritized, P - Pt, P - Pt, Pt,
                    "fundamental gap per unit bought"});
  quotes.push_back({Action::HoldCash, 0.0, 0.0, 0.0, ""});
  return quotes;
}

Action hedge_or_securitize(double cleared_price, double fundamental,
                           double skin, double spread, double lgd) {
  double sale_gain = (cleared_price - fundamental) * (1.0 - skin);
  double hedge_gain = 1.0 - spread / lgd;
  return sale_gain <= hedge_gain ? Action::LendHedge : Action::LendSecuritize;
}

namespace {

double policy_x(IndifferencePolicy policy) {
  switch (policy) {
    case IndifferencePolicy::EvenSplit: return 0.5;
    case IndifferencePolicy::FrontLoad: return 1.0;
    case IndifferencePolicy::BackLoad: return 0.0;
  }
  return 0.5;
}

}  // namespace

AllocationPlan choose_allocation(const Regime& regime_t1,
                                 const std::optional<Regime>& regime_t2,
                                 double fee, bool foresight,
                                 IndifferencePolicy policy) {
  AllocationPlan plan;
  plan.foresight = foresight;

  bool over1 = regime_t1.tag == RegimeTag::Overpriced;
  bool profitable1 = over1 && regime_t1.magnitude > 1.0 - fee;
  bool over2 = regime_t2 && regime_t2->tag == RegimeTag::Overpriced;
  bool profitable2 =
      foresight && over2 && regime_t2->magnitude > 1.0 - fee;

  if (profitable1 && profitable2) {
    // Concentrate originate-to-distribute in the richer period.
    plan.x = regime_t1.magnitude >= regime_t2->magnitude ? 1.0 : 0.0;
  } else if (profitable1) {
    plan.x = 1.0;
  } else if (profitable2) {
    plan.x = 0.0;
  } else {
    plan.x = policy_x(policy);
  }

  auto lend_leg = [&](const Regime& r, bool clears_bar) {
    if (r.tag == RegimeTag::Overpriced && clears_bar)
      return TradeLeg{Action::LendSecuritize, 1.0};
    if (r.tag == RegimeTag::Underpriced && r.magnitude > fee)
      return TradeLeg{Action::BuySecuritized, 1.0};
    return TradeLeg{Action::LendHold, 1.0};
  };
  if (plan.x > 0.0) plan.plan_t1.push_back(lend_leg(regime_t1, profitable1));
  if (plan.x < 1.0) {
    if (regime_t2)
      plan.plan_t2.push_back(lend_leg(*regime_t2, profitable2));
    else
      plan.plan_t2.push_back({Action::LendHold, 1.0});
  }
  return plan;
}

}  // namespace credcycle
