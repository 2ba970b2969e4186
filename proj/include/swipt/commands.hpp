#pragma once

// The four CLI subcommands as pure functions returning their text output.

#include <string>

#include "swipt/run_config.hpp"

namespace swipt {

/// CSV `r2_bits,r1_bits,rho,order_or_weights,hulled`.
std::string cmd_region(const RunConfig& cfg);

/// CSV `rho,sum_rate_bits,binding_constraint` plus a final `opt` row.
std::string cmd_sumrate(const RunConfig& cfg);

/// Per-weight cooperative solutions.
std::string cmd_coop(const RunConfig& cfg);

struct VerifyOutcome {
  bool pass = false;
  std::string report;
};

VerifyOutcome cmd_verify(const RunConfig& cfg);

/// Sum rate at a fixed PS factor and the constraint family that limits it
/// ("rate" or "cost"). Classical scenarios only.
double sumrate_at(const RunConfig& cfg, double rho, std::string* binding);

}  // namespace swipt
