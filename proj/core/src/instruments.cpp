#include "credcycle/instruments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace credcycle {

void validate(const Project& p) {
  if (!(p.theta >= 0.0 && p.theta <= 1.0))
    throw ValidationError("theta out of [0,1]: " + std::to_string(p.theta));
  if (p.cost != 1.0)
    throw ValidationError("project cost must be 1");
  if (!(p.payoff_good >= p.cost))
    throw ValidationError("payoff_good must be >= cost");
  if (!(p.payoff_bad <= p.payoff_good))
    throw ValidationError("payoff_bad must be <= payoff_good");
}

void validate(const FeeModel& m) {
  if (!(m.alpha >= 0.0 && m.alpha <= 1.0))
    throw ValidationError("alpha out of [0,1]");
}

void validate(const SkinModel& m) {
  if (!(m.floor > 0.0 && m.floor <= 1.0))
    throw ValidationError("skin floor out of (0,1]");
  if (!(m.d1 >= 0.0))
    throw ValidationError("skin slope must be nonnegative");
  if (!(m.d0 >= 0.0 && m.d0 <= 1.0))
    throw ValidationError("skin intercept out of [0,1]");
}

void validate(const CdsTerms& t) {
  if (!(t.lgd > 0.0 && t.lgd <= 1.0))
    throw ValidationError("lgd out of (0,1]");
  if (!(t.market_spread >= 0.0))
    throw ValidationError("market_spread must be nonnegative");
  if (t.notional != 1.0)
    throw ValidationError("cds notional must be 1");
}

double expected_project_value(const Project& p) {
  return (1.0 - p.theta) * p.payoff_good + p.theta * p.payoff_bad;
}

double origination_fee(const Project& p, const FeeModel& m) {
  double fee = p.theta;
  if (m.mode == FeeMode::SurplusShare)
    fee += m.alpha * (1.0 - p.theta) * (p.payoff_good - 1.0);
  if (fee >= 1.0)
    throw FeeTooLarge("origination fee " + std::to_string(fee) +
                      " >= 1: entrepreneur would self-finance");
  return fee;
}

double fundamental_price(const Project& p) { return 1.0 - p.theta; }

double fair_cds_spread(const Project& p, const CdsTerms& t) {
  return p.theta * t.lgd;
}

double cds_basis(const CdsTerms& t, double fee) {
  return t.market_spread - fee;
}

double skin_in_game(const Project& p, const SkinModel& m) {
  return std::clamp(m.d0 + m.d1 * p.theta, m.floor, 1.0);
}

}  // namespace credcycle
