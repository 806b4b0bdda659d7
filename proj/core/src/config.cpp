#include "credcycle/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace credcycle {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError("field '" + key + "': not a number: '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ParseError("field '" + key + "': not an unsigned integer: '" + v +
                     "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError("field '" + key + "': expected true/false, got '" + v +
                   "'");
}

void apply_key(RunSpec& spec, const std::string& key, const std::string& v) {
  ScenarioConfig& c = spec.config;
  if (key == "theta") c.project.theta = parse_double(key, v);
  else if (key == "payoff_good") c.project.payoff_good = parse_double(key, v);
  else if (key == "payoff_bad") c.project.payoff_bad = parse_double(key, v);
  else if (key == "alpha") c.fee_model.alpha = parse_double(key, v);
  else if (key == "fee_mode") {
    if (v == "expected_loss") c.fee_model.mode = FeeMode::ExpectedLoss;
    else if (v == "surplus_share") c.fee_model.mode = FeeMode::SurplusShare;
    else throw ParseError("field 'fee_mode': unknown mode '" + v + "'");
  } else if (key == "d0") c.skin_model.d0 = parse_double(key, v);
  else if (key == "d1") c.skin_model.d1 = parse_double(key, v);
  else if (key == "d_floor") c.skin_model.floor = parse_double(key, v);
  else if (key == "lgd") c.cds_terms.lgd = parse_double(key, v);
  else if (key == "e_req") c.regulatory.e_req = parse_double(key, v);
  else if (key == "g1") c.regulatory.g1 = parse_double(key, v);
  else if (key == "g2") c.regulatory.g2 = parse_double(key, v);
  else if (key == "payout_split")
    c.regulatory.payout_split = parse_double(key, v);
  else if (key == "haircut") c.regulatory.haircut = parse_double(key, v);
  else if (key == "psi1") c.sentiment.psi1 = parse_double(key, v);
  else if (key == "sigma") c.sentiment.sigma = parse_double(key, v);
  else if (key == "psi2") {
    if (v == "none") c.sentiment.psi2_override.reset();
    else c.sentiment.psi2_override = parse_double(key, v);
  } else if (key == "distribution") {
    if (v == "normal") c.sentiment.dist = Distribution::Normal;
    else if (v == "uniform") c.sentiment.dist = Distribution::Uniform;
    else if (v == "twopoint") c.sentiment.dist = Distribution::TwoPoint;
    else throw ParseError("field 'distribution': unknown value '" + v + "'");
  } else if (key == "e0") c.e0 = parse_double(key, v);
  else if (key == "leverage") c.flags.leverage = parse_bool(key, v);
  else if (key == "securitization")
    c.flags.securitization = parse_bool(key, v);
  else if (key == "cds") c.flags.cds = parse_bool(key, v);
  else if (key == "naked_cds") c.flags.naked_cds = parse_bool(key, v);
  else if (key == "foresight") c.flags.foresight = parse_bool(key, v);
  else if (key == "settlement") {
    if (v == "expectation") c.flags.settlement = SettleMode::Expectation;
    else if (v == "realized") c.flags.settlement = SettleMode::Realized;
    else throw ParseError("field 'settlement': unknown mode '" + v + "'");
  } else if (key == "indifference") {
    if (v == "even_split") c.flags.policy = IndifferencePolicy::EvenSplit;
    else if (v == "front_load") c.flags.policy = IndifferencePolicy::FrontLoad;
    else if (v == "back_load") c.flags.policy = IndifferencePolicy::BackLoad;
    else throw ParseError("field 'indifference': unknown policy '" + v + "'");
  } else if (key == "cds_mispricing_shock")
    c.cds_mispricing_shock = parse_double(key, v);
  else if (key == "eps_price") c.eps_price = parse_double(key, v);
  else if (key == "seed") spec.seed = parse_u64(key, v);
  else if (key == "paths") spec.paths = parse_u64(key, v);
  else throw ParseError("unknown key '" + key + "'");
}

}  // namespace

RunSpec parse_config_text(const std::string& text) {
  RunSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected key=value, got '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      apply_key(spec, key, value);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate_config(spec.config);
  return spec;
}

RunSpec parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_override(RunSpec& spec, const std::string& key_value) {
  std::size_t eq = key_value.find('=');
  if (eq == std::string::npos)
    throw ParseError("override must be key=value, got '" + key_value + "'");
  apply_key(spec, trim(key_value.substr(0, eq)),
            trim(key_value.substr(eq + 1)));
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string emit_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "theta=" << num(c.project.theta) << "\n";
  out << "payoff_good=" << num(c.project.payoff_good) << "\n";
  out << "payoff_bad=" << num(c.project.payoff_bad) << "\n";
  out << "alpha=" << num(c.fee_model.alpha) << "\n";
  out << "fee_mode="
      << (c.fee_model.mode == FeeMode::ExpectedLoss ? "expected_loss"
                                                    : "surplus_share")
      << "\n";
  out << "d0=" << num(c.skin_model.d0) << "\n";
  out << "d1=" << num(c.skin_model.d1) << "\n";
  out << "d_floor=" << num(c.skin_model.floor) << "\n";
  out << "lgd=" << num(c.cds_terms.lgd) << "\n";
  out << "e_req=" << num(c.regulatory.e_req) << "\n";
  out << "g1=" << num(c.regulatory.g1) << "\n";
  out << "g2=" << num(c.regulatory.g2) << "\n";
  out << "payout_split=" << num(c.regulatory.payout_split) << "\n";
  out << "haircut=" << num(c.regulatory.haircut) << "\n";
  out << "psi1=" << num(c.sentiment.psi1) << "\n";
  out << "sigma=" << num(c.sentiment.sigma) << "\n";
  if (c.sentiment.psi2_override)
    out << "psi2=" << num(*c.sentiment.psi2_override) << "\n";
  out << "distribution="
      << (c.sentiment.dist == Distribution::Normal
              ? "normal"
              : c.sentiment.dist == Distribution::Uniform ? "uniform"
                                                          : "twopoint")
      << "\n";
  out << "e0=" << num(c.e0) << "\n";
  out << "leverage=" << (c.flags.leverage ? "true" : "false") << "\n";
  out << "securitization=" << (c.flags.securitization ? "true" : "false")
      << "\n";
  out << "cds=" << (c.flags.cds ? "true" : "false") << "\n";
  out << "naked_cds=" << (c.flags.naked_cds ? "true" : "false") << "\n";
  out << "foresight=" << (c.flags.foresight ? "true" : "false") << "\n";
  out << "settlement="
      << (c.flags.settlement == SettleMode::Expectation ? "expectation"
                                                        : "realized")
      << "\n";
  const char* policy = "even_split";
  if (c.flags.policy == IndifferencePolicy::FrontLoad) policy = "front_load";
  if (c.flags.policy == IndifferencePolicy::BackLoad) policy = "back_load";
  out << "indifference=" << policy << "\n";
  out << "cds_mispricing_shock=" << num(c.cds_mispricing_shock) << "\n";
  out << "eps_price=" << num(c.eps_price) << "\n";
  return out.str();
}

}  // namespace credcycle
