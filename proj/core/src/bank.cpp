#include "credcycle/bank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace credcycle {

void validate(const RegulatoryParams& r) {
  if (!(r.haircut > 0.0 && r.haircut <= 1.0))
    throw ValidationError("haircut out of (0,1]");
  if (!(r.g1 >= 0.0 && r.g1 <= 1.0 && r.g2 >= 0.0 && r.g2 <= 1.0))
    throw ValidationError("payout ratio g out of [0,1]");
  if (!(r.e_req > 0.0 && r.e_req <= 1.0))
    throw ValidationError("capital-asset ratio out of (0,1]");
  if (!(r.payout_split >= 0.0 && r.payout_split <= 1.0))
    throw ValidationError("payout_split out of [0,1]");
}

double max_borrowing(double collateral_value, double h) {
  if (!(h > 0.0 && h <= 1.0)) throw ValidationError("haircut out of (0,1]");
  return (1.0 - h) * collateral_value;
}

double max_projects(double equity, double d, double h, FundingMode mode) {
  if (!(d > 0.0 && d <= 1.0)) throw ValidationError("d out of (0,1]");
  if (!(h > 0.0 && h <= 1.0)) throw ValidationError("haircut out of (0,1]");
  switch (mode) {
    case FundingMode::Hold: return equity;
    case FundingMode::Securitize: return equity / d;
    case FundingMode::SecuritizeLevered: return equity / d / h;
  }
  return equity;
}

double required_liquidation(double collateral_units, double h, double price) {
  if (!(h > 0.0 && h <= 1.0)) throw ValidationError("haircut out of (0,1]");
  if (!(price > 0.0 && price <= 1.0))
    throw ValidationError("liquidation price out of (0,1]");
  if (collateral_units < 0.0)
    throw ValidationError("collateral must be nonnegative");
  if (price < 1.0 - h)
    throw FullWipeout("price " + std::to_string(price) + " below 1-h = " +
                      std::to_string(1.0 - h) +
                      ": collateral cannot support any debt");
  double q = ((1.0 - price) / price) * ((1.0 - h) / h);
  return std::clamp(q, 0.0, 1.0) * collateral_units;
}

Payout payout(double trading_profit, double fee_income, double g,
              double split) {
  if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("g out of [0,1]");
  if (!(split >= 0.0 && split <= 1.0))
    throw ValidationError("split out of [0,1]");
  double base = trading_profit + fee_income;
  double distributed = base * g;
  Payout out;
  out.dividends = distributed * split;
  out.bonuses = distributed * (1.0 - split);
  out.retained = base * (1.0 - g);
  return out;
}

double capital_ratio_cap(double equity, double e_req) {
  if (!(e_req > 0.0)) throw ValidationError("e_req must be > 0");
  if (equity <= 0.0) return 0.0;
  return equity / e_req;
}

namespace {

// Sum of n independent Bernoulli(p) draws, with the fractional tail of n
// contributing one draw scaled by the remainder.
double draw_defaults(double n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution defaults(p);
  double whole = std::floor(n);
  double count = 0.0;
  for (long i = 0; i < static_cast<long>(whole); ++i)
    if (defaults(rng)) count += 1.0;
  double frac = n - whole;
  if (frac > 0.0 && defaults(rng)) count += frac;
  return count;
}

}  // namespace

SettleResult settle_period3(const BankState& state, const Project& p,
                            const CdsTerms& terms, SettleMode mode,
                            std::mt19937_64& rng) {
  const double theta = p.theta;
  const double w = terms.lgd;

  double inflow = 0.0;
  if (mode == SettleMode::Expectation) {
    inflow += state.loans_unhedged * (1.0 - theta);
    inflow += state.securities_held * (1.0 - theta);
    inflow += state.loans_hedged * 1.0;  // repaid or protection pays
    inflow += state.cds_bought * theta * w;
    inflow -= state.cds_sold * theta * w;
  } else {
    double loan_defaults = draw_defaults(state.loans_unhedged, theta, rng);
    inflow += state.loans_unhedged - loan_defaults;
    double sec_defaults = draw_defaults(state.securities_held, theta, rng);
    inflow += state.securities_held - sec_defaults;
    inflow += state.loans_hedged;
    inflow += draw_defaults(state.cds_bought, theta, rng) * w;
    inflow -= draw_defaults(state.cds_sold, theta, rng) * w;
  }

  SettleResult res;
  res.state = state;
  res.state.period = 3;
  // Collateral set aside for sold protection is released at settlement.
  double collateral_return = state.cds_sold;
  double cash = state.cash + collateral_return + inflow - state.borrowing;
  res.state.cash = cash;
  res.state.loans_unhedged = 0.0;
  res.state.loans_hedged = 0.0;
  res.state.securities_held = 0.0;
  res.state.borrowing = 0.0;
  res.state.cds_sold = 0.0;
  res.state.cds_bought = 0.0;
  res.state.equity = cash;
  res.final_equity = cash;
  res.pnl = inflow - state.borrowing;
  res.insolvent = cash < 0.0;
  return res;
}

}  // namespace credcycle
