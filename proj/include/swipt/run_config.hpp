#pragma once

// Flat `key = value` run configuration with figure presets.

#include <map>
#include <string>

#include "swipt/coop_mac.hpp"
#include "swipt/models.hpp"

namespace swipt {

enum class Scenario { kClassicalSimul, kClassicalSic, kCoop };

const char* to_string(Scenario s);

using KeyValues = std::map<std::string, std::string>;

struct RunConfig {
  Scenario scenario = Scenario::kClassicalSimul;
  ClassicalParams classical;
  CoopParams coop;
  int n_points = 512;
  int rho_points = 1001;
  int weights = 101;
  int coop_grid = 2001;
  CoopSolver coop_solver = CoopSolver::kGeneral;
  bool time_sharing = true;
  double oracle_rho_step = 1e-5;
  int oracle_pu_points = 4001;
  int verify_weights = 10;
  std::string out;
};

/// Parses `key = value` lines; `#` starts a comment. Throws kParse.
KeyValues parse_key_values(const std::string& text);

/// Values shipped with `--preset <name>`; throws kParse for unknown names.
KeyValues preset_values(const std::string& name);

/// Number with an optional dB / dBW suffix (decibels relative to 1 W).
double parse_quantity(const std::string& key, const std::string& value);

/// Preset first, then the file's keys on top.
RunConfig build_config(const KeyValues& file_values, const std::string& preset = "");

RunConfig ingest_config_text(const std::string& text, const std::string& preset = "");
RunConfig ingest_config_file(const std::string& path, const std::string& preset = "");

}  // namespace swipt
