#include "doctest.h"

#include <cmath>
#include <random>

#include "credcycle/market.hpp"

using namespace credcycle;

TEST_CASE("zero sentiment clears at the fundamental") {
  MarketState s = clear_market(0.8, 0.0, 1.0, 1.0);
  CHECK(s.cleared_price == 0.8);
  CHECK(s.deployed_capital == 0.0);
}

TEST_CASE("pessimism: deployment capped at capacity and at the gap") {
  // capacity binds
  MarketState a = clear_market(0.8, 0.3, 0.1, 0.0);
  CHECK(a.deployed_capital == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(a.cleared_price == doctest::Approx(0.6).epsilon(1e-12));

  // ample capacity: the bank restores the fundamental, no further
  MarketState b = clear_market(0.8, 0.3, 5.0, 0.0);
  CHECK(b.deployed_capital == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(b.cleared_price == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("optimism: only inventory can be sold, no shorting") {
  // no inventory: the full sentiment shows up in the price
  MarketState a = clear_market(0.8, -0.3, 5.0, 0.0);
  CHECK(a.deployed_capital == 0.0);
  CHECK(a.cleared_price == doctest::Approx(1.1).epsilon(1e-12));

  // large inventory: sales close the gap exactly
  MarketState b = clear_market(0.8, -0.3, 0.0, 2.0);
  CHECK(b.deployed_capital == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(b.cleared_price == doctest::Approx(0.8).epsilon(1e-12));

  // small inventory: proceeds bounded by inventory * pre-trade price
  MarketState c = clear_market(0.8, -0.3, 0.0, 0.1);
  CHECK(c.deployed_capital == doctest::Approx(-0.11).epsilon(1e-12));
  CHECK(c.cleared_price > 0.8);
}

TEST_CASE("clearing identity holds on random admissible triples") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uf(0.2, 0.99);
  std::uniform_real_distribution<double> ucap(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double P = uf(rng);
    std::uniform_real_distribution<double> upsi(-0.9 * P, 0.9 * P);
    double psi = upsi(rng);
    double capacity = ucap(rng);
    double inventory = ucap(rng);
    MarketState s = clear_market(P, psi, capacity, inventory);
    REQUIRE(s.cleared_price > 0.0);
    double total = noise_trader_demand(P, psi, s.cleared_price) +
                   bank_demand(s.deployed_capital, s.cleared_price);
    CHECK(std::abs(total - 1.0) <= 1e-12);
    // bank trading never overshoots the sentiment shock or flips its sign
    double gap = s.cleared_price - P;
    CHECK(std::abs(gap) <= std::abs(psi) + 1e-15);
    if (psi > 0.0) CHECK(gap <= 1e-15);
    if (psi < 0.0) CHECK(gap >= -1e-15);
  }
}

TEST_CASE("deep pessimism below zero price is rejected") {
  CHECK_THROWS_AS(clear_market(0.5, 0.9, 0.0, 0.0), NegativePrice);
}

TEST_CASE("zero cleared price is rejected in demand functions") {
  CHECK_THROWS_AS(noise_trader_demand(0.8, 0.1, 0.0), ZeroPrice);
  CHECK_THROWS_AS(bank_demand(0.1, 0.0), ZeroPrice);
}

TEST_CASE("regime classification with tolerance band") {
  CHECK(classify_regime(0.9, 0.8).tag == RegimeTag::Overpriced);
  CHECK(classify_regime(0.7, 0.8).tag == RegimeTag::Underpriced);
  CHECK(classify_regime(0.8, 0.8).tag == RegimeTag::Fair);
  CHECK(classify_regime(0.8 + 1e-12, 0.8).tag == RegimeTag::Fair);
  CHECK(classify_regime(0.9, 0.8).magnitude ==
        doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(classify_regime(0.8, 0.8, 0.0), ValidationError);
}
