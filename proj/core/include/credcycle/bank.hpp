#pragma once

#include <cstdint>
#include <random>

#include "credcycle/errors.hpp"
#include "credcycle/instruments.hpp"

namespace credcycle {

// Value type owned by a single simulation path. Counts are continuous:
// positions scale with capital, not with an integer number of contracts.
struct BankState {
  double equity = 0.0;
  double cash = 0.0;
  double loans_unhedged = 0.0;
  double loans_hedged = 0.0;
  double securities_held = 0.0;  // includes skin-in-the-game retention
  double borrowing = 0.0;
  double cds_sold = 0.0;    // one unit of equity collateral per contract
  double cds_bought = 0.0;  // hedged contracts live with loans_hedged
  int period = 1;
};

struct RegulatoryParams {
  double e_req = 0.02;       // capital-asset ratio floor E/N
  double g1 = 1.0;           // payout ratio, period 1
  double g2 = 1.0;           // payout ratio, period 2
  double payout_split = 0.5; // share of the distribution going to shareholders
  double haircut = 0.2;      // h; L = (1-h) J
};

void validate(const RegulatoryParams& r);

enum class FundingMode { Hold, Securitize, SecuritizeLevered };

/// (1 - h) * collateral_value
double max_borrowing(double collateral_value, double h);

/// Project capacity per unit of starting equity: E0 (Hold), E0/d
/// (Securitize), E0/(d h) (SecuritizeLevered).
double max_projects(double equity, double d, double h, FundingMode mode);

/// Forced sale restoring the haircut after a price fall: S = J1 * Q with
/// Q = ((1-P2)/P2)((1-h)/h), clamped to [0, J1]. Throws FullWipeout when
/// P2 < 1-h.
double required_liquidation(double collateral_units, double h, double price);

struct Payout {
  double dividends = 0.0;
  double bonuses = 0.0;
  double retained = 0.0;
};

/// Splits (B + fee_income): fraction g distributed (split to
/// shareholders, rest to employees), fraction 1-g retained as equity.
Payout payout(double trading_profit, double fee_income, double g,
              double split);

/// Largest book N satisfying E/N >= e_req.
double capital_ratio_cap(double equity, double e_req);

enum class SettleMode { Expectation, Realized };

struct SettleResult {
  BankState state;      // period = 3, all borrowing repaid
  double final_equity = 0.0;
  double pnl = 0.0;     // terminal inflows net of debt repayment
  bool insolvent = false;
};

/// Terminal settlement. Expectation mode books expected cash flows;
/// Realized mode draws independent defaults per unit position.
SettleResult settle_period3(const BankState& state, const Project& p,
                            const CdsTerms& terms, SettleMode mode,
                            std::mt19937_64& rng);

}  // namespace credcycle
