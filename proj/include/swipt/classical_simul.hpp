#pragma once

// Two-user PS-SWIPT MAC with simultaneous (joint) decoding.

#include "swipt/models.hpp"
#include "swipt/numerics.hpp"
#include "swipt/region.hpp"
#include "swipt/report.hpp"

namespace swipt {

struct SimulBreakpoints {
  double rho_c = 0.0;  // cost bound meets the sum-rate bound
  double rho_1 = 0.0;  // cost bound meets user 2's single-user bound (R1 = 0)
  double rho_2 = 0.0;  // cost bound meets user 1's single-user bound (R2 = 0)
  double residual_c = 0.0;
  double residual_1 = 0.0;
  double residual_2 = 0.0;
};

/// Rate supported by the harvested power, phi^{-1}(psi(rho a)), capped at `cap`.
double simul_cost_rate(const ClassicalParams& params, double rho, double cap);

/// Gamma_c, Gamma_1, Gamma_2 evaluated at x (each equals N_p at its breakpoint).
double simul_gamma(const ClassicalParams& params, int which, double x);

bool simul_feasible(const ClassicalParams& params, const RatePoint& point, double tol = 1e-12);

/// Throws kInfeasible when the harvested power never pays for decoding.
SimulBreakpoints simul_breakpoints(const ClassicalParams& params, const RootConfig& cfg = {});

struct SimulOptions {
  int n_points = 512;
  bool time_sharing = true;
};

/// True when x -> phi^{-1}(psi(x)) passes a second-difference convexity test on [lo, hi].
bool cost_rate_convex(const ClassicalParams& params, double lo, double hi, int samples = 512);

BoundaryCurve mdrb_simultaneous(const ClassicalParams& params, const SimulOptions& opts = {});

/// phi(sum-rate bound) - psi(rho a): positive at rho = 0, non-positive at rho = 1.
double simul_sumrate_residual(const ClassicalParams& params, double rho);

SolveReport sumrate_simultaneous(const ClassicalParams& params, const RootConfig& cfg = {});

/// Closed form for linear EH, exponential cost and no decoder noise.
double simul_closed_form_rho(const ClassicalParams& params);

}  // namespace swipt
