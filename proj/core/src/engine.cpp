#include "credcycle/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "credcycle/rng.hpp"

namespace credcycle {

void validate_config(const ScenarioConfig& c) {
  validate(c.project);
  validate(c.fee_model);
  validate(c.skin_model);
  validate(c.cds_terms);
  validate(c.regulatory);
  if (!(c.e0 > 0.0)) throw ValidationError("E0 must be > 0");
  if (!(c.sentiment.sigma >= 0.0))
    throw ValidationError("sigma must be nonnegative");
  if (!(c.eps_price > 0.0)) throw ValidationError("eps_price must be > 0");
  if (c.flags.leverage && !(c.regulatory.haircut > c.project.theta))
    throw ValidationError("h > theta required when leverage is on");
  origination_fee(c.project, c.fee_model);  // throws FeeTooLarge
}

namespace {

double draw_increment(const SentimentState& s, std::mt19937_64& rng) {
  switch (s.dist) {
    case Distribution::Normal: {
      std::normal_distribution<double> d(0.0, s.sigma);
      return s.sigma > 0.0 ? d(rng) : 0.0;
    }
    case Distribution::Uniform: {
      double a = s.sigma * std::sqrt(3.0);  // matches variance sigma^2
      std::uniform_real_distribution<double> d(-a, a);
      return s.sigma > 0.0 ? d(rng) : 0.0;
    }
    case Distribution::TwoPoint: {
      std::bernoulli_distribution d(0.5);
      return d(rng) ? s.sigma : -s.sigma;
    }
  }
  return 0.0;
}

// Preference when gross yields tie: real lending first, then trading.
int preference_rank(Action a) {
  switch (a) {
    case Action::LendSecuritize: return 0;
    case Action::LendHold: return 1;
    case Action::LendHedge: return 2;
    case Action::BuySecuritized: return 3;
    case Action::SellCds: return 4;
    case Action::BuyNakedCds: return 5;
    case Action::HoldCash: return 6;
  }
  return 7;
}

struct Books {
  BankState bank;
  double equity = 0.0;  // E0 plus retained profits
  double dividends = 0.0;
  double bonuses = 0.0;
  double retained = 0.0;
  double payout_base = 0.0;   // sum of (B + f) amounts run through payout
  double gross_income = 0.0;  // full-life expected pnl of every position
  double projects_this_period = 0.0;
};

// Distributions accrue here and are paid at settlement; with zero rates
// the shareholders are indifferent and mid-path cash stays nonnegative.
void accrue(Books& b, const Payout& po, double base) {
  b.dividends += po.dividends;
  b.bonuses += po.bonuses;
  b.retained += po.retained;
  b.equity += po.retained;
  b.payout_base += base;
}

struct ExecContext {
  const ScenarioConfig* cfg;
  double fundamental;
  double fee;
  double skin;
  double spread;
};

// Deploys `funds` units of capital into `action` at the given market.
// Position sizes respect the capacity rule, the capital-asset cap, and
// available cash. Returns the number of projects financed (if any).
double execute(Books& b, Action action, double funds, const MarketState& m,
               double g, const ExecContext& ctx) {
  const auto& cfg = *ctx.cfg;
  const double P = ctx.fundamental;
  const double Pt = m.cleared_price;
  const double f = ctx.fee;
  const double d = ctx.skin;
  const double s = ctx.spread;
  const double theta = cfg.project.theta;
  const double h = cfg.regulatory.haircut;
  const double split = cfg.regulatory.payout_split;
  if (funds <= 0.0) return 0.0;

  double cap_e = capital_ratio_cap(b.equity, cfg.regulatory.e_req) -
                 b.projects_this_period;
  auto cash_limit = [&](double outflow_per_unit) {
    return outflow_per_unit > 0.0 ? b.bank.cash / outflow_per_unit
                                  : std::numeric_limits<double>::infinity();
  };

  switch (action) {
    case Action::LendHold: {
      double n = std::min({funds, std::max(cap_e, 0.0), cash_limit(1.0 - f)});
      if (n <= 0.0) return 0.0;
      b.bank.cash += -n + f * n;
      b.bank.loans_unhedged += n;
      accrue(b, payout(0.0, f * n, g, split), f * n);
      b.gross_income += (f - theta) * n;
      b.projects_this_period += n;
      return n;
    }
    case Action::LendSecuritize: {
      FundingMode mode = cfg.flags.leverage ? FundingMode::SecuritizeLevered
                                            : FundingMode::Securitize;
      double borrow_per = cfg.flags.leverage ? (1.0 - h) * d : 0.0;
      double outflow = 1.0 - f - (1.0 - d) * Pt - borrow_per;
      double n = std::min({max_projects(funds, d, h, mode),
                           std::max(cap_e, 0.0), cash_limit(outflow)});
      if (n <= 0.0) return 0.0;
      b.bank.cash -= outflow * n;
      b.bank.securities_held += d * n;
      b.bank.borrowing += borrow_per * n;
      double trade = (Pt - P) * (1.0 - d) * n;
      accrue(b, payout(trade, f * n, g, split), trade + f * n);
      b.gross_income += (f - 1.0 + (1.0 - d) * Pt + d * (1.0 - theta)) * n;
      b.projects_this_period += n;
      return n;
    }
    case Action::LendHedge: {
      double n = std::min({funds / (1.0 + s), std::max(cap_e, 0.0),
                           cash_limit(1.0 + s - f)});
      if (n <= 0.0) return 0.0;
      b.bank.cash += -(1.0 + s) * n + f * n;
      b.bank.loans_hedged += n;
      accrue(b, payout(0.0, f * n, g, split), f * n);
      b.gross_income += (f - s) * n;
      b.projects_this_period += n;
      return n;
    }
    case Action::SellCds: {
      // one unit of equity collateral per contract, premium received now
      double c = std::min(funds, cash_limit(1.0 - s));
      if (c <= 0.0) return 0.0;
      b.bank.cash += -c + s * c;
      b.bank.cds_sold += c;
      b.gross_income += (s - theta * cfg.cds_terms.lgd) * c;
      return 0.0;
    }
    case Action::BuyNakedCds: {
      if (s <= 0.0) return 0.0;
      double spend = std::min(funds, b.bank.cash);
      if (spend <= 0.0) return 0.0;
      double c = spend / s;
      b.bank.cash -= spend;
      b.bank.cds_bought += c;
      b.gross_income += (theta * cfg.cds_terms.lgd - s) * c;
      return 0.0;
    }
    case Action::BuySecuritized: {
      if (Pt <= 0.0) return 0.0;
      double q = std::min(funds / Pt, cash_limit(Pt));
      if (q <= 0.0) return 0.0;
      b.bank.cash -= q * Pt;
      b.bank.securities_held += q;
      double trade = (P - Pt) * q;
      accrue(b, payout(trade, 0.0, g, split), trade);
      b.gross_income += (P - Pt) * q;
      return 0.0;
    }
    case Action::HoldCash:
      return 0.0;
  }
  return 0.0;
}

// Best action by gross yield, ties broken toward real lending.
Action pick_action(const std::vector<StrategyQuote>& quotes,
                   const Regime& regime) {
  Action best = Action::HoldCash;
  double best_yield = 0.0;
  int best_rank = preference_rank(Action::HoldCash);
  for (const auto& q : quotes) {
    if (q.action == Action::BuySecuritized &&
        regime.tag != RegimeTag::Underpriced)
      continue;
    if (q.action == Action::BuyNakedCds && q.gross_yield <= 0.0) continue;
    double y = q.gross_yield;
    int r = preference_rank(q.action);
    if (y > best_yield + 1e-15 ||
        (std::abs(y - best_yield) <= 1e-15 && r < best_rank)) {
      best = q.action;
      best_yield = y;
      best_rank = r;
    }
  }
  return best;
}

}  // namespace

PathResult run_path(const ScenarioConfig& cfg, std::mt19937_64& rng) {
  validate_config(cfg);
  PathResult res;

  const double P = fundamental_price(cfg.project);
  const double f = origination_fee(cfg.project, cfg.fee_model);
  const double d = skin_in_game(cfg.project, cfg.skin_model);
  const double w = cfg.cds_terms.lgd;
  const double s = std::max(
      0.0, fair_cds_spread(cfg.project, cfg.cds_terms) + cfg.cds_mispricing_shock);
  CdsTerms terms = cfg.cds_terms;
  terms.market_spread = s;
  const double theta = cfg.project.theta;

  res.psi1 = cfg.sentiment.psi1;
  double delta = draw_increment(cfg.sentiment, rng);  // drawn unconditionally
  res.psi2 = cfg.sentiment.psi2_override ? *cfg.sentiment.psi2_override
                                         : res.psi1 + delta;

  Books b;
  b.bank.equity = cfg.e0;
  b.bank.cash = cfg.e0;
  b.equity = cfg.e0;

  ExecContext ctx{&cfg, P, f, d, s};
  QuoteOptions qopts;
  qopts.cds_enabled = cfg.flags.cds;
  qopts.naked_cds_enabled = cfg.flags.naked_cds && s > 0.0;
  qopts.securitization_enabled = cfg.flags.securitization;

  // --- period 1 ---
  MarketState m1;
  try {
    m1 = clear_market(P, res.psi1, 0.0, 0.0);
  } catch (const NegativePrice&) {
    res.negative_price = true;
    res.final_equity = cfg.e0;
    return res;
  }
  res.price_t1 = m1.cleared_price;
  Regime r1 = classify_regime(m1.cleared_price, P, cfg.eps_price);

  std::optional<Regime> r2_foreseen;
  if (cfg.flags.foresight)
    r2_foreseen = classify_regime(P - res.psi2, P, cfg.eps_price);

  AllocationPlan plan = choose_allocation(r1, r2_foreseen, f,
                                          cfg.flags.foresight,
                                          cfg.flags.policy);
  res.x = plan.x;

  double funds1 = cfg.e0 * plan.x;
  double reserve = cfg.e0 - funds1;
  if (funds1 > 0.0) {
    Action a1 = pick_action(quote_actions(m1, cfg.project, terms, f, d, qopts),
                            r1);
    if (a1 == Action::BuyNakedCds) {
      // all-in speculative position: the whole equity buys protection
      funds1 = cfg.e0;
      reserve = 0.0;
      res.x = 1.0;
    }
    res.projects_t1 =
        execute(b, a1, funds1, m1, cfg.regulatory.g1, ctx);
    if (a1 != Action::HoldCash) res.actions_t1.push_back(a1);
  }
  res.cyclicity = std::abs(2.0 * res.x - 1.0);
  b.bank.period = 2;
  b.projects_this_period = 0.0;

  // --- period 2 ---
  MarketState m2;
  bool t2_tradable = true;
  try {
    m2 = clear_market(P, res.psi2, 0.0, 0.0);
    res.price_t2 = m2.cleared_price;
  } catch (const NegativePrice&) {
    res.negative_price = true;
    t2_tradable = false;
    res.price_t2 = P - res.psi2;
  }

  if (t2_tradable) {
    Regime r2 = classify_regime(m2.cleared_price, P, cfg.eps_price);
    double p2 = m2.cleared_price;

    // Haircut covenant first: a price fall on a levered book forces sales.
    if (b.bank.borrowing > 0.0 && p2 < res.price_t1 && p2 <= 1.0) {
      try {
        double sold = required_liquidation(b.bank.securities_held,
                                           cfg.regulatory.haircut, p2);
        if (sold > 0.0) {
          b.bank.securities_held -= sold;
          double repay = std::min(sold * p2, b.bank.borrowing);
          b.bank.borrowing -= repay;
          b.bank.cash += sold * p2 - repay;
          b.gross_income += (p2 - (1.0 - theta)) * sold;
          res.liquidation = sold;
        }
      } catch (const FullWipeout&) {
        res.wipeout = true;
        double sold = b.bank.securities_held;
        double proceeds = sold * p2;
        b.bank.securities_held = 0.0;
        double repay = std::min(proceeds, b.bank.borrowing);
        b.bank.borrowing -= repay;
        b.bank.cash += proceeds - repay;
        b.gross_income += (p2 - (1.0 - theta)) * sold;
        res.liquidation = sold;
      }
    }

    // Loans already on the books: in an overpriced market either sell
    // them as securitized assets or keep and hedge.
    if (b.bank.loans_unhedged > 0.0 && r2.tag == RegimeTag::Overpriced &&
        cfg.flags.securitization) {
      Action held = cfg.flags.cds && s > 0.0
                        ? hedge_or_securitize(p2, P, d, s, w)
                        : Action::LendSecuritize;
      double loans = b.bank.loans_unhedged;
      if (held == Action::LendSecuritize) {
        b.bank.loans_unhedged = 0.0;
        b.bank.securities_held += d * loans;
        b.bank.cash += (1.0 - d) * loans * p2;
        double trade = (p2 - P) * (1.0 - d) * loans;
        accrue(b, payout(trade, 0.0, cfg.regulatory.g2,
                         cfg.regulatory.payout_split),
               trade);
        b.gross_income += ((1.0 - d) * p2 + d * (1.0 - theta) -
                           (1.0 - theta)) * loans;
      } else {
        double affordable = std::min(loans, b.bank.cash / s);
        b.bank.loans_unhedged -= affordable;
        b.bank.loans_hedged += affordable;
        b.bank.cash -= s * affordable;
        b.gross_income += (theta - s) * affordable;
      }
      res.actions_t2.push_back(held);
    }

    // Fresh deployment from the reserve plus retained profits.
    double funds2 = std::min(reserve + b.retained, b.bank.cash);
    if (funds2 > 1e-15) {
      Action a2 = pick_action(
          quote_actions(m2, cfg.project, terms, f, d, qopts), r2);
      res.projects_t2 =
          execute(b, a2, funds2, m2, cfg.regulatory.g2, ctx);
      if (a2 != Action::HoldCash) res.actions_t2.push_back(a2);
    }
  }

  // --- period 3: settlement ---
  b.bank.period = 3;
  res.cds_sold = b.bank.cds_sold;
  res.cds_bought = b.bank.cds_bought;
  SettleResult settled = settle_period3(b.bank, cfg.project, terms,
                                        cfg.flags.settlement, rng);
  res.insolvent = settled.insolvent;
  res.final_equity = settled.final_equity - b.dividends - b.bonuses;
  res.dividends = b.dividends;
  res.bonuses = b.bonuses;
  res.retained = b.retained;
  res.settlement_pnl = b.gross_income - b.payout_base;
  res.output_proxy = expected_project_value(cfg.project) *
                     (res.projects_t1 + res.projects_t2);
  return res;
}

const std::vector<std::string>& path_metric_names() {
  static const std::vector<std::string> names = {
      "x",           "cyclicity",    "projects_t1",   "projects_t2",
      "projects",    "output_proxy", "price_t1",      "price_t2",
      "psi_delta",   "liquidation",  "final_equity",  "dividends",
      "bonuses",     "retained",     "settlement_pnl", "cds_sold",
      "cds_bought",  "insolvent",    "wipeout",       "negative_price"};
  return names;
}

double path_metric(const PathResult& r, const std::string& name) {
  if (name == "x") return r.x;
  if (name == "cyclicity") return r.cyclicity;
  if (name == "projects_t1") return r.projects_t1;
  if (name == "projects_t2") return r.projects_t2;
  if (name == "projects") return r.projects_t1 + r.projects_t2;
  if (name == "output_proxy") return r.output_proxy;
  if (name == "price_t1") return r.price_t1;
  if (name == "price_t2") return r.price_t2;
  if (name == "psi_delta") return r.psi2 - r.psi1;
  if (name == "liquidation") return r.liquidation;
  if (name == "final_equity") return r.final_equity;
  if (name == "dividends") return r.dividends;
  if (name == "bonuses") return r.bonuses;
  if (name == "retained") return r.retained;
  if (name == "settlement_pnl") return r.settlement_pnl;
  if (name == "cds_sold") return r.cds_sold;
  if (name == "cds_bought") return r.cds_bought;
  if (name == "insolvent") return r.insolvent ? 1.0 : 0.0;
  if (name == "wipeout") return r.wipeout ? 1.0 : 0.0;
  if (name == "negative_price") return r.negative_price ? 1.0 : 0.0;
  throw ValidationError("unknown metric: " + name);
}

namespace {

MetricStats stats_of(std::vector<double> v) {
  MetricStats s;
  const std::size_t n = v.size();
  if (n == 0) return s;
  // fixed combination order by path index keeps sums reproducible
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - s.mean) * (x - s.mean);
  s.stddev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  std::sort(v.begin(), v.end());
  auto quantile = [&](double q) {
    double pos = q * static_cast<double>(n - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, n - 1);
    double frac = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
  };
  s.q05 = quantile(0.05);
  s.q50 = quantile(0.50);
  s.q95 = quantile(0.95);
  return s;
}

}  // namespace

RunSummary run_monte_carlo(const ScenarioConfig& cfg, std::uint64_t n_paths,
                           std::uint64_t seed) {
  if (n_paths < 1) throw ValidationError("n_paths must be >= 1");
  validate_config(cfg);

  std::map<std::string, std::vector<double>> columns;
  for (const auto& name : path_metric_names()) columns[name].reserve(n_paths);
  for (std::uint64_t i = 0; i < n_paths; ++i) {
    auto rng = path_rng(seed, i);
    PathResult r = run_path(cfg, rng);
    for (const auto& name : path_metric_names())
      columns[name].push_back(path_metric(r, name));
  }

  RunSummary summary;
  summary.n_paths = n_paths;
  summary.seed = seed;
  summary.metric_names = path_metric_names();
  for (const auto& name : summary.metric_names)
    summary.metrics[name] = stats_of(columns[name]);
  return summary;
}

std::vector<ScenarioRow> compare_scenarios(
    const std::vector<std::pair<std::string, ScenarioConfig>>& configs,
    std::uint64_t n_paths, std::uint64_t seed) {
  std::vector<ScenarioRow> rows;
  rows.reserve(configs.size());
  for (const auto& [id, cfg] : configs)
    rows.push_back({id, run_monte_carlo(cfg, n_paths, seed)});
  return rows;
}

}  // namespace credcycle
