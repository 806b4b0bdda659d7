#include "doctest.h"

#include <cmath>
#include <random>

#include "credcycle/bank.hpp"

using namespace credcycle;

namespace {

// Independent check for the forced-sale rule: find the smallest sale S in
// [0, J] after which the remaining position supports the remaining debt
// at the required haircut, i.e. L - S*p <= (1-h)*(J - S)*p with the debt
// taken out at face value, L = (1-h)*J. Bisection on the (monotone)
// shortfall.
double liquidation_search(double J, double h, double p) {
  double L = (1.0 - h) * J;
  auto shortfall = [&](double S) {
    return (L - S * p) - (1.0 - h) * (J - S) * p;
  };
  if (shortfall(0.0) <= 0.0) return 0.0;
  if (shortfall(J) > 0.0) return J;  // even selling everything fails
  double lo = 0.0, hi = J;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (shortfall(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("borrowing capacity") {
  CHECK(max_borrowing(1.0, 0.2) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(max_borrowing(0.0, 0.2) == 0.0);
  CHECK_THROWS_AS(max_borrowing(1.0, 0.0), ValidationError);
}

TEST_CASE("project capacity per funding mode") {
  CHECK(max_projects(1.0, 0.2, 0.2, FundingMode::Hold) == 1.0);
  CHECK(max_projects(1.0, 0.2, 0.2, FundingMode::Securitize) == 5.0);
  CHECK(max_projects(1.0, 0.2, 0.2, FundingMode::SecuritizeLevered) == 25.0);
  // scales linearly in equity
  CHECK(max_projects(2.0, 0.2, 0.2, FundingMode::Securitize) == 10.0);
  CHECK_THROWS_AS(max_projects(1.0, 0.0, 0.2, FundingMode::Hold),
                  ValidationError);
}

TEST_CASE("forced sale polar cases") {
  // h = 1: all-equity positions never need sales
  CHECK(required_liquidation(3.0, 1.0, 0.5) == 0.0);
  // price at the wipeout boundary: everything goes (exact at h = 1/2)
  CHECK(required_liquidation(3.0, 0.5, 0.5) == 3.0);
  // no price fall, no sale
  CHECK(required_liquidation(3.0, 0.2, 1.0) == 0.0);
  // below the boundary the collateral cannot support any debt
  CHECK_THROWS_AS(required_liquidation(3.0, 0.2, 0.7), FullWipeout);
  CHECK_THROWS_AS(required_liquidation(3.0, 0.2, 1.2), ValidationError);
  CHECK_THROWS_AS(required_liquidation(-1.0, 0.2, 0.9), ValidationError);
}

TEST_CASE("forced sale matches the haircut-restoration search") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> uh(0.25, 0.95);
  std::uniform_real_distribution<double> uj(0.1, 10.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    double h = uh(rng);
    double J = uj(rng);
    // price in ((1-h), 1]: above wipeout, at or below par
    double p = (1.0 - h) + u01(rng) * h;
    if (p <= 1.0 - h || p > 1.0) continue;
    double S = required_liquidation(J, h, p);
    double S_ref = liquidation_search(J, h, p);
    CHECK(std::abs(S - S_ref) <= 1e-9 * std::max(1.0, J));
  }
}

TEST_CASE("forced sale shrinks with higher haircuts and higher prices") {
  const double theta = 0.2;
  for (int i = 0; i < 20; ++i) {
    double h = theta + 0.02 + (0.97 - theta) * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      double p = (1.0 - h) + 1e-6 + (h - 2e-6) * j / 19.0;
      double S = required_liquidation(1.0, h, p);
      double dh = 1e-6, dp = 1e-6;
      if (S > 0.0 && S < 1.0 && p + dp <= 1.0) {
        CHECK(required_liquidation(1.0, h + dh, p) < S);
        CHECK(required_liquidation(1.0, h, p + dp) < S);
      }
    }
  }
}

TEST_CASE("distribution split and retention") {
  // one-period book B + f = 1: fraction g paid out, half to shareholders
  Payout t1 = payout(0.6, 0.4, 0.2, 0.5);
  CHECK(t1.dividends == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(t1.bonuses == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(t1.retained == doctest::Approx(0.8).epsilon(1e-15));
  // shareholders end up with dividends plus the retained equity
  CHECK(t1.dividends + t1.retained == doctest::Approx(0.9).epsilon(1e-14));

  Payout t2 = payout(0.6, 0.4, 0.4, 0.5);
  CHECK(t2.dividends + t2.retained == doctest::Approx(0.8).epsilon(1e-14));

  CHECK_THROWS_AS(payout(1.0, 0.0, 1.5, 0.5), ValidationError);
  CHECK_THROWS_AS(payout(1.0, 0.0, 0.5, -0.1), ValidationError);
}

TEST_CASE("capital-asset ratio cap") {
  CHECK(capital_ratio_cap(1.0, 0.02) == doctest::Approx(50.0).epsilon(1e-15));
  CHECK(capital_ratio_cap(0.0, 0.02) == 0.0);
  CHECK(capital_ratio_cap(-0.5, 0.02) == 0.0);
  CHECK_THROWS_AS(capital_ratio_cap(1.0, 0.0), ValidationError);
}

TEST_CASE("settlement in expectation mode") {
  Project p;  // theta 0.2
  CdsTerms terms;
  std::mt19937_64 rng(1);

  BankState b;
  b.cash = 0.2;
  b.loans_unhedged = 1.0;
  SettleResult r = settle_period3(b, p, terms, SettleMode::Expectation, rng);
  CHECK(r.final_equity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!r.insolvent);

  // hedged loans repay with certainty
  b = BankState{};
  b.loans_hedged = 2.0;
  r = settle_period3(b, p, terms, SettleMode::Expectation, rng);
  CHECK(r.final_equity == doctest::Approx(2.0).epsilon(1e-12));

  // sold protection: expected payout leaves the collateral minus theta*w
  b = BankState{};
  b.cds_sold = 1.0;  // one unit of collateral already posted (cash = 0)
  r = settle_period3(b, p, terms, SettleMode::Expectation, rng);
  CHECK(r.final_equity == doctest::Approx(0.8).epsilon(1e-12));

  // bought protection pays theta*w per contract in expectation
  b = BankState{};
  b.cds_bought = 5.0;
  r = settle_period3(b, p, terms, SettleMode::Expectation, rng);
  CHECK(r.final_equity == doctest::Approx(1.0).epsilon(1e-12));

  // debt is repaid out of terminal inflows
  b = BankState{};
  b.securities_held = 1.0;
  b.borrowing = 0.9;
  r = settle_period3(b, p, terms, SettleMode::Expectation, rng);
  CHECK(r.final_equity == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(r.insolvent);
}

TEST_CASE("settlement in realized mode is reproducible and unbiased") {
  Project p;
  CdsTerms terms;
  BankState b;
  b.loans_unhedged = 4.5;  // fractional tail exercised

  std::mt19937_64 r1(99), r2(99);
  SettleResult a = settle_period3(b, p, terms, SettleMode::Realized, r1);
  SettleResult c = settle_period3(b, p, terms, SettleMode::Realized, r2);
  CHECK(a.final_equity == c.final_equity);

  std::mt19937_64 rng(7);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i)
    sum += settle_period3(b, p, terms, SettleMode::Realized, rng).final_equity;
  // expectation is 4.5 * 0.8 = 3.6; Monte-Carlo error ~ 0.9/sqrt(n)
  CHECK(std::abs(sum / n - 3.6) < 0.05);
}
