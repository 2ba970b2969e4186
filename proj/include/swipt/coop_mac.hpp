#pragma once

// Two-user PS-SWIPT MAC with user cooperation (common + fresh messages).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "swipt/models.hpp"
#include "swipt/numerics.hpp"
#include "swipt/region.hpp"

namespace swipt {

/// Signed slack of every constraint; feasible when all are >= 0.
struct CoopSlacks {
  double link12 = 0.0;     // bits: user 1 -> user 2 fresh-message bound
  double link21 = 0.0;     // bits
  double sum_rate = 0.0;   // bits: destination sum-rate bound
  double dest_cost = 0.0;  // W: harvested power minus destination decoding cost
  double budget1 = 0.0;    // W
  double budget2 = 0.0;    // W

  bool feasible(double tol = 1e-12) const;
};

CoopSlacks coop_constraints_eval(const CoopParams& params, const PowerAllocation& alloc,
                                 double rho, double r1, double r2);

/// Terms of the exponential-cost, linear-EH stationary point.
struct CoopClosedTerms {
  double coop_a = 0.0;  // P_U1 - beta c P_U2
  double coop_b = 0.0;  // P_U2 - beta b P_U1
  double c = 0.0, d = 0.0, e = 0.0, f = 0.0;
  double c1 = 0.0, c2 = 0.0;
  double stationary_residual1 = 0.0;
  double stationary_residual2 = 0.0;
  double gradient_norm = 0.0;  // central-difference gradient of the reduced objective
};

struct CoopSolution {
  PowerAllocation alloc;
  double rho = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double weighted_rate = 0.0;
  // budget1 (W), budget2 (W), destination cost (W), destination sum rate (bits)
  std::array<double, 4> residuals{};
  bool cooperation_valid = false;
  bool constraint36_satisfied = false;
  bool interior = false;  // the four equalities could not all be met
  CoopClosedTerms terms;
  std::string note;
};

/// Reduced objective in (P_u1, P_u2) after eliminating P_12, P_21 with the
/// budget equalities (exponential costs with a common beta).
double coop_reduced_objective(const CoopParams& params, double mu1, double mu2, double pu1,
                              double pu2);

CoopSolution coop_solve_closed_form(const CoopParams& params, double mu1, double mu2);

/// Any EH / cost combination. The scan runs over R2 with R1 maximised for each R2.
CoopSolution coop_solve_general(const CoopParams& params, double mu1, double mu2,
                                const ScanConfig& scan = {2001, 100});

/// Feasibility of a rate pair with full budget use: fills the allocation and
/// the admissible PS-factor interval.
struct CoopRatePlan {
  bool feasible = false;
  PowerAllocation alloc;
  double s = 0.0;
  double rho_min = 0.0;
  double rho_max = 0.0;
};

CoopRatePlan coop_plan(const CoopParams& params, double r1, double r2);

/// Largest feasible R1 for a given R2, or -1 when R2 itself is infeasible.
double coop_max_r1(const CoopParams& params, double r2);

enum class CoopSolver { kClosed, kGeneral };

std::vector<std::pair<double, double>> default_weights(int count = 101);

BoundaryCurve coop_mdrb(const CoopParams& params,
                        const std::vector<std::pair<double, double>>& weights, CoopSolver solver,
                        const ScanConfig& scan = {2001, 100});

/// Frontier traced directly on an R2 grid (no weight sweep), then hulled.
BoundaryCurve coop_frontier(const CoopParams& params, int n_points = 2001);

}  // namespace swipt
