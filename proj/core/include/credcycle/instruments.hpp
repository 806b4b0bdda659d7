#pragma once

#include "credcycle/errors.hpp"

namespace credcycle {

// An investment project: costs 1, pays payoff_good with probability
// 1 - theta and payoff_bad otherwise.
struct Project {
  double theta = 0.2;
  double payoff_good = 1.2;
  double payoff_bad = 0.0;
  double cost = 1.0;
};

// Rejects a malformed project; call at construction boundaries.
void validate(const Project& p);

enum class FeeMode { ExpectedLoss, SurplusShare };

// alpha is banking-sector competitiveness: 0 = perfectly competitive.
struct FeeModel {
  double alpha = 0.0;
  FeeMode mode = FeeMode::ExpectedLoss;
};

void validate(const FeeModel& m);

// Retention schedule d(theta) = clamp(d0 + d1*theta, floor, 1).
struct SkinModel {
  double d0 = 0.1;
  double d1 = 0.5;
  double floor = 0.05;
};

void validate(const SkinModel& m);

// Fully collateralized default protection paying lgd on default.
struct CdsTerms {
  double lgd = 1.0;
  double notional = 1.0;
  double market_spread = 0.0;
};

void validate(const CdsTerms& t);

/// (1 - theta) * payoff_good + theta * payoff_bad
double expected_project_value(const Project& p);

/// Upfront fee charged to the entrepreneur. ExpectedLoss mode: theta.
/// SurplusShare mode: theta + alpha * (1 - theta) * (payoff_good - 1).
/// Throws FeeTooLarge when the fee reaches 1.
double origination_fee(const Project& p, const FeeModel& m);

/// Fundamental price of the securitized claim: 1 - theta.
double fundamental_price(const Project& p);

/// Zero-profit spread: theta * lgd.
double fair_cds_spread(const Project& p, const CdsTerms& t);

/// market_spread - fee; positive in normal times, negative under stress.
double cds_basis(const CdsTerms& t, double fee);

/// Retained fraction d(theta) of each securitized loan, in (0, 1].
double skin_in_game(const Project& p, const SkinModel& m);

}  // namespace credcycle
