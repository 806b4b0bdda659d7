// End-to-end acceptance checks. Each numbered check prints one
// [PASS]/[FAIL] line; the process exits nonzero if any check fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "credcycle/bank.hpp"
#include "credcycle/engine.hpp"
#include "credcycle/instruments.hpp"
#include "credcycle/market.hpp"
#include "credcycle/presets.hpp"
#include "credcycle/rng.hpp"
#include "credcycle/runio.hpp"
#include "credcycle/strategy.hpp"

using namespace credcycle;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

#define EXPECT(cond)                        \
  do {                                      \
    if (!(cond)) {                          \
      ok = false;                           \
      if (detail.empty()) detail = #cond;   \
    }                                       \
  } while (0)

// Independent haircut-restoration search: smallest sale S in [0, J] with
// L - S*p <= (1-h)(J-S)*p, debt at face value L = (1-h)J.
double liquidation_search(double J, double h, double p) {
  double L = (1.0 - h) * J;
  auto shortfall = [&](double S) {
    return (L - S * p) - (1.0 - h) * (J - S) * p;
  };
  if (shortfall(0.0) <= 0.0) return 0.0;
  if (shortfall(J) > 0.0) return J;
  double lo = 0.0, hi = J;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (shortfall(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void c1_leverage_multiplier() {
  bool ok = true;
  std::string detail;
  EXPECT(max_projects(1.0, 0.2, 0.2, FundingMode::Hold) == 1.0);
  EXPECT(max_projects(1.0, 0.2, 0.2, FundingMode::Securitize) == 5.0);
  EXPECT(max_projects(1.0, 0.2, 0.2, FundingMode::SecuritizeLevered) == 25.0);
  report(1, "funding-mode capacity is exactly 1 / 5 / 25", ok, detail);
}

void c2_liquidation() {
  bool ok = true;
  std::string detail;
  // polar cases
  EXPECT(required_liquidation(1.0, 1.0, 0.5) == 0.0);
  EXPECT(required_liquidation(1.0, 0.5, 0.5) == 1.0);

  // interior values against the brute-force search
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uh(0.25, 0.95);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 300 && ok; ++i) {
    double h = uh(rng);
    double p = (1.0 - h) + 1e-6 + u01(rng) * (h - 2e-6);
    double S = required_liquidation(1.0, h, p);
    EXPECT(std::abs(S - liquidation_search(1.0, h, p)) <= 1e-9);
  }

  // finite-difference monotonicity on a 20x20 grid with h > theta
  const double theta = 0.2;
  for (int i = 0; i < 20 && ok; ++i) {
    double h = theta + 0.02 + (0.95 - theta - 0.02) * i / 19.0;
    for (int j = 0; j < 20 && ok; ++j) {
      double p = (1.0 - h) + 1e-5 + (h - 2e-5) * j / 19.0;
      double S = required_liquidation(1.0, h, p);
      if (S <= 0.0 || S >= 1.0) continue;
      EXPECT(required_liquidation(1.0, h + 1e-7, p) < S);
      EXPECT(required_liquidation(1.0, h, p + 1e-7) < S);
    }
  }
  report(2, "forced sales: polar cases, search oracle, monotonicity", ok,
         detail);
}

void c3_clearing() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uf(0.2, 0.99);
  std::uniform_real_distribution<double> ucap(0.0, 1.0);
  for (int i = 0; i < 1000 && ok; ++i) {
    double P = uf(rng);
    std::uniform_real_distribution<double> upsi(-0.9 * P, 0.9 * P);
    double psi = upsi(rng);
    double capacity = ucap(rng);
    MarketState s = clear_market(P, psi, capacity, ucap(rng));
    double total = noise_trader_demand(P, psi, s.cleared_price) +
                   bank_demand(s.deployed_capital, s.cleared_price);
    EXPECT(std::abs(total - 1.0) <= 1e-12);
    double gap = s.cleared_price - P;
    EXPECT(std::abs(gap) <= std::abs(psi) + 1e-15);
    EXPECT(!(psi > 0.0 && gap > 1e-15));
    EXPECT(!(psi < 0.0 && gap < -1e-15));
  }
  report(3, "market clearing identity and no-overshoot on 1000 draws", ok,
         detail);
}

void c4_fair_indifference() {
  bool ok = true;
  std::string detail;
  for (double theta : {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    Project p;
    p.theta = theta;
    CdsTerms terms;
    terms.market_spread = theta;
    MarketState m;
    m.fundamental = 1.0 - theta;
    m.cleared_price = 1.0 - theta;
    for (const auto& q : quote_actions(m, p, terms, theta, 0.3))
      EXPECT(std::abs(q.expected_profit_per_unit_capital) <= 1e-12);
  }
  report(4, "fair prices leave every action at zero expected profit", ok,
         detail);
}

void c5_theta_threshold() {
  bool ok = true;
  std::string detail;
  for (double theta = 0.05; theta < 0.951; theta += 0.05) {
    Project p;
    p.theta = theta;
    CdsTerms terms;
    terms.market_spread = theta;
    double P = 1.0 - theta;
    bool tied = false;
    for (double p2 = 0.0; p2 <= P + 1e-12; p2 += 0.01) {
      MarketState m;
      m.fundamental = P;
      m.cleared_price = p2;
      double sell = 0.0, buy = 0.0;
      for (const auto& q : quote_actions(m, p, terms, theta, 0.2)) {
        if (q.action == Action::SellCds) sell = q.gross_yield;
        if (q.action == Action::BuySecuritized) buy = q.gross_yield;
      }
      if (theta > 0.5) EXPECT(sell >= buy - 1e-12);
      if (std::abs(sell - buy) <= 1e-9) tied = true;
    }
    if (theta > 0.5 + 1e-9)
      EXPECT(!tied);
    else
      EXPECT(tied);
  }
  report(5, "protection sales dominate distressed buying for theta > 1/2", ok,
         detail);
}

void c6_hedge_vs_sale() {
  bool ok = true;
  std::string detail;
  double sale_gain = (0.9 - 0.8) * (1.0 - 0.1);
  double hedge_gain = 1.0 - 0.2 / 1.0;
  EXPECT(std::abs(sale_gain - 0.09) <= 1e-12);
  EXPECT(std::abs(hedge_gain - 0.8) <= 1e-12);
  EXPECT(sale_gain < hedge_gain);
  EXPECT(hedge_or_securitize(0.9, 0.8, 0.1, 0.2) == Action::LendHedge);
  report(6, "held loan is hedged, not sold: 0.09 < 0.8", ok, detail);
}

void c7_payout() {
  bool ok = true;
  std::string detail;
  for (double base : {0.5, 1.0, 2.5}) {
    Payout t1 = payout(0.25 * base, 0.75 * base, 0.2, 0.5);
    EXPECT(std::abs((t1.dividends + t1.retained) - 0.9 * base) <= 1e-12);
    Payout t2 = payout(0.25 * base, 0.75 * base, 0.4, 0.5);
    EXPECT(std::abs((t2.dividends + t2.retained) - 0.8 * base) <= 1e-12);
  }
  report(7, "shareholder totals are 0.9 and 0.8 of the distribution base", ok,
         detail);
}

void c8_regimes() {
  bool ok = true;
  std::string detail;
  auto rng1 = path_rng(1, 0);
  PathResult over = run_path(preset_config("overpricing-t1"), rng1);
  EXPECT(over.x == 1.0);
  EXPECT(over.cyclicity == 1.0);

  auto rng2 = path_rng(1, 0);
  PathResult base = run_path(preset_config("baseline"), rng2);
  EXPECT(base.x == 0.5);
  EXPECT(base.cyclicity == 0.0);

  for (std::uint64_t i = 0; i < 20 && ok; ++i) {
    auto rng = path_rng(8, i);
    PathResult bb = run_path(preset_config("boom-bust"), rng);
    EXPECT(bb.x == 1.0);
    EXPECT(bb.projects_t1 == 5.0);
    EXPECT(bb.projects_t2 == 0.0);
    EXPECT(!bb.actions_t1.empty() &&
           bb.actions_t1[0] == Action::LendSecuritize);
  }
  report(8, "preset regimes: x=1 boom, x=0.5 baseline, one-sided boom-bust",
         ok, detail);
}

void c9_basis_sign() {
  bool ok = true;
  std::string detail;
  ScenarioConfig fair = preset_config("cds-fair");
  ScenarioConfig neg = preset_config("cds-negative-basis");
  for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
    auto ra = path_rng(seed, 0);
    auto rb = path_rng(seed, 0);
    PathResult a = run_path(fair, ra);
    PathResult b = run_path(neg, rb);
    EXPECT(b.projects_t1 + b.projects_t2 < a.projects_t1 + a.projects_t2);
    EXPECT(std::abs(b.cds_bought - 1.0 / 0.1) <= 1e-12);  // E0 / s
  }
  report(9, "negative basis crowds out lending; contracts = E0/s", ok, detail);
}

void c10_determinism() {
  bool ok = true;
  std::string detail;
  ScenarioConfig c = preset_config("securitization-fair");

  auto records = [&](std::uint64_t n, std::uint64_t seed) {
    std::vector<PathResult> paths;
    for (std::uint64_t i = 0; i < n; ++i) {
      auto rng = path_rng(seed, i);
      paths.push_back(run_path(c, rng));
    }
    return paths_csv(paths);
  };
  EXPECT(records(200, 42) == records(200, 42));

  ScenarioConfig wide;
  wide.sentiment.sigma = 0.2;
  RunSummary s = run_monte_carlo(wide, 10000, 42);
  EXPECT(std::abs(s.metrics.at("psi_delta").mean) <= 0.008);
  report(10, "byte-identical records; sentiment increment is unbiased", ok,
         detail);
}

}  // namespace

int main() {
  c1_leverage_multiplier();
  c2_liquidation();
  c3_clearing();
  c4_fair_indifference();
  c5_theta_threshold();
  c6_hedge_vs_sale();
  c7_payout();
  c8_regimes();
  c9_basis_sign();
  c10_determinism();
  if (failures) std::printf("%d acceptance check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
