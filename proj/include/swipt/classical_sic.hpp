#pragma once

// Two-user PS-SWIPT MAC with successive interference cancellation.

#include "swipt/models.hpp"
#include "swipt/numerics.hpp"
#include "swipt/region.hpp"
#include "swipt/report.hpp"

namespace swipt {

struct SicBreakpoints {
  DecodingOrder order = DecodingOrder::kUser1First;
  double rho_c = 0.0;  // both rate bounds exactly paid for
  double rho_1 = 0.0;  // user 2's bound paid for, R1 = 0
  double rho_2 = 0.0;  // user 1's bound paid for, R2 = 0
  double residual_c = 0.0;  // Gamma_c(rho_c) - a
  double residual_1 = 0.0;
  double residual_2 = 0.0;
};

/// Per-user rate bounds for the given order at PS factor rho.
double sic_bound(const ClassicalParams& params, DecodingOrder order, int user, double rho);

bool sic_feasible(const ClassicalParams& params, const RatePoint& point, DecodingOrder order,
                  double tol = 1e-12);

SicBreakpoints sic_breakpoints(const ClassicalParams& params, DecodingOrder order,
                               const RootConfig& cfg = {});

/// Gamma_c / Gamma_1 / Gamma_2 of the SIC scheme (which = 0, 1, 2); each equals a at its root.
double sic_gamma(const ClassicalParams& params, DecodingOrder order, int which, double x);

struct SicOptions {
  int n_points = 512;
  bool time_sharing = true;
};

/// Single decoding order, no hull.
std::vector<RatePoint> sic_order_points(const ClassicalParams& params, DecodingOrder order,
                                        int n_points);

BoundaryCurve mdrb_sic(const ClassicalParams& params, const SicOptions& opts = {});

struct SicSumrateOptions {
  ScanConfig scan{};
  bool alternate_f2 = false;  // evaluate the alternative second objective, for comparison
};

/// Candidate enumeration over both decoding orders. The stronger user is
/// solved as user 1; rates and labels come back in the caller's numbering.
SolveReport sic_sumrate_numeric(const ClassicalParams& params, const SicSumrateOptions& opts = {});

struct SicClosedForm {
  double rho_opt = 0.0;
  double sum_rate = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double a_term = 0.0;  // stronger user's received power
  double b_term = 0.0;
  double c_term = 0.0;
  double delta = 0.0;
  double rho_1 = 0.0;        // smaller quadratic root, equals rho_opt
  double rho_2 = 0.0;        // cost feasibility threshold of the second user
  double rho_ceiling = 0.0;  // end of the increasing range
  bool relabeled = false;
  bool ordering_holds = false;  // rho_2 < rho_opt <= rho_ceiling
  bool noise_warning = false;   // N > N_p / 100
};

/// Closed form for linear EH and exponential cost.
SicClosedForm sic_sumrate_closed_form(const ClassicalParams& params);

}  // namespace swipt
