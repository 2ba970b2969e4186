#pragma once

// Brute-force grid verifiers. None of these use a closed form or a root finder.

#include "swipt/coop_mac.hpp"
#include "swipt/models.hpp"

namespace swipt {

struct OracleResult {
  double rho = 0.0;
  double sum_rate = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// max over the rho grid of min(sum-rate bound, cost-supported rate).
OracleResult oracle_simul_sumrate(const ClassicalParams& params, double rho_step = 1e-5);

/// Per rho: each single-user bound made tight in turn, the other rate from the
/// remaining harvested power, both decoding orders, plus single-user points.
OracleResult oracle_sic_sumrate(const ClassicalParams& params, double rho_step = 1e-5);

struct CoopGrid {
  int pu_points = 4001;
  int rho_points = 4001;
};

/// Grid over (P_u1, P_u2, rho) with P_12, P_21 from the budget equalities.
/// User decoding costs must be exponential.
CoopSolution oracle_coop_weighted(const CoopParams& params, double mu1, double mu2,
                                  const CoopGrid& grid = {});

}  // namespace swipt
