#include "swipt/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "swipt/error.hpp"

namespace swipt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void parse_error(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::kParse, key + ": " + what);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "scenario", "eh", "eh_q1", "eh_q2", "eh_pmax", "eh_eta", "cost", "beta", "phi0",
      "user_cost", "user_beta", "user_phi0", "d1", "d2", "alpha", "h1_sq", "h2_sq", "h1", "h2",
      "h_u", "h12", "h21", "p1", "p2", "pu1_budget", "pu2_budget", "n", "n_p", "n1", "n2",
      "neglect_decoder_noise", "n_points", "rho_points", "weights", "coop_grid", "coop_solver",
      "time_sharing", "oracle_rho_step", "oracle_pu_points", "verify_weights", "out"};
  return keys;
}

class Reader {
 public:
  explicit Reader(const KeyValues& kv) : kv_(kv) {}

  bool has(const std::string& k) const { return kv_.count(k) != 0; }

  const std::string& raw(const std::string& k) const {
    auto it = kv_.find(k);
    if (it == kv_.end()) parse_error(k, "missing required key");
    return it->second;
  }

  double num(const std::string& k) const { return parse_quantity(k, raw(k)); }
  double num(const std::string& k, double fallback) const { return has(k) ? num(k) : fallback; }

  double positive(const std::string& k) const {
    const double v = num(k);
    if (!(v > 0.0)) parse_error(k, "must be positive");
    return v;
  }

  double non_negative(const std::string& k) const {
    const double v = num(k);
    if (!(v >= 0.0)) parse_error(k, "must be non-negative");
    return v;
  }

  int count(const std::string& k, int fallback, int min_value) const {
    if (!has(k)) return fallback;
    const double v = num(k);
    if (v != std::floor(v) || v < min_value || v > 1e8) {
      parse_error(k, "must be an integer >= " + std::to_string(min_value));
    }
    return static_cast<int>(v);
  }

  bool flag(const std::string& k, bool fallback) const {
    if (!has(k)) return fallback;
    const std::string v = lower(raw(k));
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    parse_error(k, "expected true or false, got '" + raw(k) + "'");
  }

  std::string word(const std::string& k, const std::string& fallback) const {
    return has(k) ? lower(raw(k)) : fallback;
  }

 private:
  const KeyValues& kv_;
};

EhModel read_eh(const Reader& r) {
  const std::string kind = r.word("eh", "logistic");
  try {
    if (kind == "logistic") {
      return EhModel::logistic(r.num("eh_q1", 1500.0), r.num("eh_q2", 0.0022),
                               r.num("eh_pmax", 0.024));
    }
    if (kind == "linear") return EhModel::linear(r.num("eh_eta", 1.0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDomain) parse_error("eh", e.what());
    throw;
  }
  parse_error("eh", "expected logistic or linear, got '" + kind + "'");
}

CostModel make_cost(const std::string& family_key, const std::string& family,
                    const std::string& beta_key, const std::string& phi0_key, const Reader& r) {
  if (family == "exp") return CostModel::exponential(r.positive(beta_key));
  if (family == "log") return CostModel::logarithmic(r.positive(beta_key));
  if (family == "lin") return CostModel::linear(r.positive(beta_key));
  if (family == "const") return CostModel::constant(r.non_negative(phi0_key));
  parse_error(family_key, "expected exp, log, lin or const, got '" + family + "'");
}

// |h|^2 from an explicit key or from distance d^{-2 alpha}.
double power_gain(const Reader& r, const std::string& gain_key, const std::string& dist_key) {
  if (r.has(gain_key)) return r.positive(gain_key);
  if (r.has(dist_key)) {
    const double d = r.positive(dist_key);
    return std::pow(d, -2.0 * r.positive("alpha"));
  }
  parse_error(gain_key, "missing (give " + gain_key + " or " + dist_key + " with alpha)");
}

double amplitude_gain(const Reader& r, const std::string& amp_key, const std::string& dist_key) {
  if (r.has(amp_key)) return r.non_negative(amp_key);
  if (r.has(dist_key)) return std::pow(r.positive(dist_key), -r.positive("alpha"));
  parse_error(amp_key, "missing (give " + amp_key + " or " + dist_key + " with alpha)");
}

}  // namespace

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::kClassicalSimul: return "classical-simul";
    case Scenario::kClassicalSic: return "classical-sic";
    case Scenario::kCoop: return "coop";
  }
  return "?";
}

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": empty key");
    if (!known_keys().count(key)) parse_error(key, "unknown key");
    if (value.empty()) parse_error(key, "empty value");
    if (kv.count(key)) parse_error(key, "given twice");
    kv[key] = value;
  }
  return kv;
}

double parse_quantity(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  bool db = false;
  const std::string lv = lower(v);
  for (const char* suffix : {"dbw", "db"}) {
    const std::string s(suffix);
    if (lv.size() > s.size() && lv.compare(lv.size() - s.size(), s.size(), s) == 0) {
      v = trim(v.substr(0, v.size() - s.size()));
      db = true;
      break;
    }
  }
  size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    parse_error(key, "not a number: '" + value + "'");
  }
  if (used != v.size() || !std::isfinite(x)) parse_error(key, "not a number: '" + value + "'");
  return db ? std::pow(10.0, x / 10.0) : x;
}

KeyValues preset_values(const std::string& name) {
  KeyValues kv = {{"eh", "logistic"}, {"eh_q1", "1500"}, {"eh_q2", "0.0022"},
                  {"eh_pmax", "0.024"}, {"d1", "3"}, {"d2", "3"}, {"alpha", "2"},
                  {"p1", "0.5"}, {"p2", "0.5"}, {"n", "-60dB"}, {"n_p", "-30dB"}};
  const std::string p = lower(name);
  if (p == "fig3a") {
    kv["cost"] = "exp";
    kv["beta"] = "1e-3";
  } else if (p == "fig3b") {
    kv["cost"] = "log";
    kv["beta"] = "1e-3";
  } else if (p == "fig3c") {
    kv["cost"] = "lin";
    kv["beta"] = "1e-3";
  } else if (p == "fig3d") {
    kv["cost"] = "const";
    kv["phi0"] = "0.013";
  } else if (p == "fig4a" || p == "fig4b") {
    kv["scenario"] = p == "fig4a" ? "classical-simul" : "classical-sic";
    kv["cost"] = "exp";
    kv["beta"] = "0.1";
  } else if (p == "fig5a" || p == "fig5b" || p == "fig5c" || p == "fig5d") {
    static const std::map<std::string, std::string> beta = {
        {"fig5a", "-30dB"}, {"fig5b", "-27dB"}, {"fig5c", "-24dB"}, {"fig5d", "-21dB"}};
    kv["scenario"] = "coop";
    kv["cost"] = "exp";
    kv["beta"] = beta.at(p);
    kv["h_u"] = "0.008";
    kv["n1"] = "-60dB";
    kv["n2"] = "-60dB";
  } else {
    throw Error(ErrorCode::kParse, "preset: unknown preset '" + name + "'");
  }
  return kv;
}

RunConfig build_config(const KeyValues& file_values, const std::string& preset) {
  KeyValues kv = preset.empty() ? KeyValues{} : preset_values(preset);
  for (const auto& [k, v] : file_values) kv[k] = v;
  const Reader r(kv);

  RunConfig cfg;
  const std::string sc = r.word("scenario", "");
  if (sc.empty()) parse_error("scenario", "missing required key");
  if (sc == "classical-simul") {
    cfg.scenario = Scenario::kClassicalSimul;
  } else if (sc == "classical-sic") {
    cfg.scenario = Scenario::kClassicalSic;
  } else if (sc == "coop") {
    cfg.scenario = Scenario::kCoop;
  } else {
    parse_error("scenario", "expected classical-simul, classical-sic or coop, got '" + sc + "'");
  }

  const EhModel eh = read_eh(r);
  const std::string family = r.word("cost", "exp");
  CostModel cost = CostModel::exponential(1.0);
  try {
    cost = make_cost("cost", family, "beta", "phi0", r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDomain) parse_error("cost", e.what());
    throw;
  }
  const bool neglect = r.flag("neglect_decoder_noise", false);
  const double n = r.non_negative("n");
  const double n_p = r.positive("n_p");

  cfg.n_points = r.count("n_points", 512, 2);
  cfg.rho_points = r.count("rho_points", 1001, 2);
  cfg.weights = r.count("weights", 101, 2);
  cfg.coop_grid = r.count("coop_grid", 2001, 3);
  cfg.oracle_pu_points = r.count("oracle_pu_points", 4001, 2);
  cfg.verify_weights = r.count("verify_weights", 10, 2);
  cfg.time_sharing = r.flag("time_sharing", true);
  cfg.oracle_rho_step = r.num("oracle_rho_step", 1e-5);
  if (!(cfg.oracle_rho_step > 0.0 && cfg.oracle_rho_step <= 1e-3)) {
    parse_error("oracle_rho_step", "must lie in (0, 1e-3]");
  }
  const std::string solver = r.word("coop_solver", "general");
  if (solver == "general") {
    cfg.coop_solver = CoopSolver::kGeneral;
  } else if (solver == "closed") {
    cfg.coop_solver = CoopSolver::kClosed;
  } else {
    parse_error("coop_solver", "expected closed or general, got '" + solver + "'");
  }
  if (r.has("out")) cfg.out = r.raw("out");

  if (cfg.scenario == Scenario::kCoop) {
    CoopParams& c = cfg.coop;
    c.h1 = amplitude_gain(r, "h1", "d1");
    c.h2 = amplitude_gain(r, "h2", "d2");
    const double hu = r.has("h_u") ? r.non_negative("h_u") : -1.0;
    c.h12 = r.has("h12") ? r.non_negative("h12") : hu;
    c.h21 = r.has("h21") ? r.non_negative("h21") : hu;
    if (c.h12 < 0.0) parse_error("h12", "missing (give h12 or h_u)");
    if (c.h21 < 0.0) parse_error("h21", "missing (give h21 or h_u)");
    c.p_u1_budget = r.has("pu1_budget") ? r.non_negative("pu1_budget") : r.non_negative("p1");
    c.p_u2_budget = r.has("pu2_budget") ? r.non_negative("pu2_budget") : r.non_negative("p2");
    c.n = n;
    c.n_p = n_p;
    c.n1 = r.has("n1") ? r.positive("n1") : n;
    c.n2 = r.has("n2") ? r.positive("n2") : n;
    c.eh = eh;
    c.cost_dest = cost;
    if (r.has("user_cost") || r.has("user_beta") || r.has("user_phi0")) {
      const std::string uf = r.word("user_cost", family);
      KeyValues uk = kv;
      if (r.has("user_beta")) uk["beta"] = kv.at("user_beta");
      if (r.has("user_phi0")) uk["phi0"] = kv.at("user_phi0");
      c.cost_user1 = make_cost("user_cost", uf, "beta", "phi0", Reader(uk));
    } else {
      c.cost_user1 = cost;
    }
    c.cost_user2 = c.cost_user1;
    c.neglect_decoder_noise = neglect;
    try {
      c.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, std::string("channel: ") + e.what());
    }
  } else {
    ClassicalParams& p = cfg.classical;
    p.h1_sq = power_gain(r, "h1_sq", "d1");
    p.h2_sq = power_gain(r, "h2_sq", "d2");
    p.p1 = r.non_negative("p1");
    p.p2 = r.non_negative("p2");
    p.n = n;
    p.n_p = n_p;
    p.eh = eh;
    p.cost = cost;
    p.neglect_decoder_noise = neglect;
    try {
      p.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, std::string("channel: ") + e.what());
    }
  }
  return cfg;
}

RunConfig ingest_config_text(const std::string& text, const std::string& preset) {
  return build_config(parse_key_values(text), preset);
}

RunConfig ingest_config_file(const std::string& path, const std::string& preset) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_config_text(ss.str(), preset);
}

}  // namespace swipt
