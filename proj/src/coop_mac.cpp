#include "swipt/coop_mac.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "parallel.hpp"
#include "swipt/classical_simul.hpp"

namespace swipt {

namespace {

double dest_rate_bound(const CoopParams& p, double s, double rho) {
  const double x = 1.0 - rho;
  return half_log2_1p(x * s / (x * p.decoder_noise() + p.n_p));
}

bool exp_family(const CostModel& c) { return c.family() == CostModel::Family::kExp; }

std::string weight_tag(double mu1, double mu2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g/%.6g", mu1, mu2);
  return buf;
}

}  // namespace

bool CoopSlacks::feasible(double tol) const {
  return link12 >= -tol && link21 >= -tol && sum_rate >= -tol && dest_cost >= -tol &&
         budget1 >= -tol && budget2 >= -tol;
}

CoopSlacks coop_constraints_eval(const CoopParams& params, const PowerAllocation& alloc,
                                 double rho, double r1, double r2) {
  CoopSlacks s;
  const double sig = params.received_power(alloc);
  s.link12 = half_log2_1p(params.b() * alloc.p12) - r1;
  s.link21 = half_log2_1p(params.c() * alloc.p21) - r2;
  s.sum_rate = dest_rate_bound(params, sig, rho) - (r1 + r2);
  s.dest_cost = params.eh.eval(rho * (sig + params.n)) - params.cost_dest.eval(r1 + r2);
  s.budget1 = params.p_u1_budget - params.cost_user1.eval(r2) - alloc.p1();
  s.budget2 = params.p_u2_budget - params.cost_user2.eval(r1) - alloc.p2();
  return s;
}

double coop_reduced_objective(const CoopParams& params, double mu1, double mu2, double pu1,
                              double pu2) {
  const double beta = params.cost_dest.beta();
  const double b = params.b();
  const double c = params.c();
  const double k = 1.0 - beta * beta * b * c;
  const double ca = params.p_u1_budget - beta * c * params.p_u2_budget;
  const double cb = params.p_u2_budget - beta * b * params.p_u1_budget;
  const double x1 = b * (ca - pu1 + beta * c * pu2) / k;
  const double x2 = c * (cb - pu2 + beta * b * pu1) / k;
  return mu1 * half_log2_1p(x1) + mu2 * half_log2_1p(x2);
}

CoopSolution coop_solve_closed_form(const CoopParams& params, double mu1, double mu2) {
  params.validate();
  const double beta = params.cost_dest.beta();
  auto same = [&](const CostModel& m) {
    return exp_family(m) && std::fabs(m.beta() - beta) <= 1e-12 * beta;
  };
  if (!params.eh.is_linear() || !same(params.cost_dest) || !same(params.cost_user1) ||
      !same(params.cost_user2)) {
    throw Error(ErrorCode::kDomain,
                "closed form needs linear EH and a common exponential cost at all three nodes");
  }
  if (!(mu1 >= 0.0 && mu2 >= 0.0 && mu1 + mu2 > 0.0)) {
    throw Error(ErrorCode::kDomain, "weights must be non-negative and not both zero");
  }
  const double b = params.b();
  const double c = params.c();
  const double bc = b * c;
  const double k = 1.0 - beta * beta * bc;
  if (std::fabs(k) < 1e-12) {
    throw Error(ErrorCode::kSingular, "beta^2 b c = 1: the stationary powers are not unique");
  }
  CoopSolution sol;
  auto& t = sol.terms;
  t.coop_a = params.p_u1_budget - beta * c * params.p_u2_budget;
  t.coop_b = params.p_u2_budget - beta * b * params.p_u1_budget;
  t.c = beta * b * bc * (mu1 + mu2);
  t.d = bc * (mu1 + mu2 * beta * beta * bc);
  t.e = bc * (mu2 + mu1 * beta * beta * bc);
  t.f = beta * bc * c * (mu1 + mu2);
  t.c1 = mu1 * b * (k + t.coop_b * c) - mu2 * beta * bc * (k + t.coop_a * b);
  t.c2 = mu2 * c * (k + t.coop_a * b) - mu1 * beta * bc * (k + t.coop_b * c);

  // -C pu1 + D pu2 = C1,  E pu1 - F pu2 = C2
  auto [pu1, pu2] = solve_2x2(-t.c, t.d, t.e, -t.f, t.c1, t.c2);
  {
    // One step of iterative refinement; the coefficients can span many decades.
    const auto [d1, d2] = solve_2x2(-t.c, t.d, t.e, -t.f, t.c1 - (t.d * pu2 - t.c * pu1),
                                    t.c2 - (t.e * pu1 - t.f * pu2));
    pu1 += d1;
    pu2 += d2;
  }
  t.stationary_residual1 = t.d * pu2 - t.c * pu1 - t.c1;
  t.stationary_residual2 = t.e * pu1 - t.f * pu2 - t.c2;

  auto& al = sol.alloc;
  al.pu1 = pu1;
  al.pu2 = pu2;
  al.p12 = (t.coop_a - pu1 + beta * c * pu2) / k;
  al.p21 = (t.coop_b - pu2 + beta * b * pu1) / k;

  const double h = 1e-8 * std::max({params.p_u1_budget, params.p_u2_budget, 1e-30});
  const double g1 = (coop_reduced_objective(params, mu1, mu2, pu1 + h, pu2) -
                     coop_reduced_objective(params, mu1, mu2, pu1 - h, pu2)) / (2.0 * h);
  const double g2 = (coop_reduced_objective(params, mu1, mu2, pu1, pu2 + h) -
                     coop_reduced_objective(params, mu1, mu2, pu1, pu2 - h)) / (2.0 * h);
  t.gradient_norm = std::hypot(g1, g2);

  const double s = params.received_power(al);
  const double cost_term = beta * (b * al.p12 + c * al.p21 + bc * al.p12 * al.p21);
  sol.rho = cost_term / (params.eh.eta() * (s + params.n));

  const bool powers_ok = al.p12 >= 0.0 && al.p21 >= 0.0 && al.pu1 >= 0.0 && al.pu2 >= 0.0;
  sol.r1 = al.p12 >= 0.0 ? half_log2_1p(b * al.p12) : 0.0;
  sol.r2 = al.p21 >= 0.0 ? half_log2_1p(c * al.p21) : 0.0;
  sol.weighted_rate = mu1 * sol.r1 + mu2 * sol.r2;

  sol.residuals[0] = al.p12 + al.pu1 + beta * c * al.p21 - params.p_u1_budget;
  sol.residuals[1] = al.p21 + al.pu2 + beta * b * al.p12 - params.p_u2_budget;
  sol.residuals[2] = cost_term - params.eh.eta() * sol.rho * (s + params.n);
  const bool rho_ok = std::isfinite(sol.rho) && sol.rho >= 0.0 && sol.rho <= 1.0;
  if (powers_ok && rho_ok) {
    const double gap = dest_rate_bound(params, s, sol.rho) - (sol.r1 + sol.r2);
    sol.residuals[3] = gap;
    sol.constraint36_satisfied = gap >= -1e-12;
  } else {
    sol.residuals[3] = std::numeric_limits<double>::quiet_NaN();
  }
  sol.cooperation_valid = powers_ok && rho_ok && sol.constraint36_satisfied;
  if (!powers_ok) {
    sol.note = "negative power in the stationary point";
  } else if (!rho_ok) {
    sol.note = "PS factor outside [0, 1]";
  } else if (!sol.constraint36_satisfied) {
    sol.note = "destination sum-rate bound violated";
  }
  return sol;
}

CoopRatePlan coop_plan(const CoopParams& params, double r1, double r2) {
  CoopRatePlan plan;
  auto& al = plan.alloc;
  al.p12 = snr_for_rate(r1) / params.b();
  al.p21 = snr_for_rate(r2) / params.c();
  al.pu1 = params.p_u1_budget - al.p12 - params.cost_user1.eval(r2);
  al.pu2 = params.p_u2_budget - al.p21 - params.cost_user2.eval(r1);
  if (al.pu1 < 0.0 || al.pu2 < 0.0) return plan;
  plan.s = params.received_power(al);
  const double total = plan.s + params.n;
  const double rs = r1 + r2;
  const double need = params.cost_dest.eval(rs);
  if (need > 0.0) {
    if (!(need < params.eh.ceiling()) || params.eh.eval(total) < need) return plan;
    plan.rho_min = params.eh.inverse(need) / total;
  }
  plan.rho_max = 1.0;
  const double t = snr_for_rate(rs);
  if (t > 0.0) {
    const double room = plan.s - t * params.decoder_noise();
    if (!(room > 0.0)) return plan;
    plan.rho_max = 1.0 - t * params.n_p / room;
  }
  plan.feasible = plan.rho_min <= plan.rho_max && plan.rho_max >= 0.0 && plan.rho_min <= 1.0;
  return plan;
}

double coop_max_r1(const CoopParams& params, double r2) {
  if (!coop_plan(params, 0.0, r2).feasible) return -1.0;
  const double cap = half_log2_1p(params.b() * params.p_u1_budget);
  if (coop_plan(params, cap, r2).feasible) return cap;
  RootConfig rc;
  rc.abs_tol = 1e-14;
  return bisect_predicate([&](double r1) { return coop_plan(params, r1, r2).feasible; }, 0.0, cap,
                          rc);
}

namespace {

double coop_max_r2(const CoopParams& params) {
  const double cap = half_log2_1p(params.c() * params.p_u2_budget);
  if (coop_plan(params, 0.0, cap).feasible) return cap;
  RootConfig rc;
  rc.abs_tol = 1e-14;
  return bisect_predicate([&](double r2) { return coop_plan(params, 0.0, r2).feasible; }, 0.0,
                          cap, rc);
}

}  // namespace

CoopSolution coop_solve_general(const CoopParams& params, double mu1, double mu2,
                                const ScanConfig& scan) {
  params.validate();
  if (!(mu1 >= 0.0 && mu2 >= 0.0 && mu1 + mu2 > 0.0)) {
    throw Error(ErrorCode::kDomain, "weights must be non-negative and not both zero");
  }
  if (!coop_plan(params, 0.0, 0.0).feasible) {
    throw Error(ErrorCode::kInfeasible, "no feasible rate pair");
  }
  const double r2_top = coop_max_r2(params);
  double r2 = 0.0;
  if (r2_top > 0.0) {
    auto objective = [&](double x) {
      const double r1 = coop_max_r1(params, x);
      if (r1 < 0.0) return -std::numeric_limits<double>::infinity();
      return mu1 * r1 + mu2 * x;
    };
    r2 = maximize_scan(objective, 0.0, r2_top, scan).argmax;
  }
  CoopSolution sol;
  sol.r2 = r2;
  sol.r1 = std::max(coop_max_r1(params, r2), 0.0);
  const CoopRatePlan plan = coop_plan(params, sol.r1, sol.r2);
  sol.alloc = plan.alloc;
  sol.rho = plan.rho_min;
  sol.weighted_rate = mu1 * sol.r1 + mu2 * sol.r2;
  const double rs = sol.r1 + sol.r2;
  sol.residuals[0] = sol.alloc.p1() + params.cost_user1.eval(sol.r2) - params.p_u1_budget;
  sol.residuals[1] = sol.alloc.p2() + params.cost_user2.eval(sol.r1) - params.p_u2_budget;
  sol.residuals[2] = params.cost_dest.eval(rs) - params.eh.eval(sol.rho * (plan.s + params.n));
  sol.residuals[3] = dest_rate_bound(params, plan.s, sol.rho) - rs;
  sol.constraint36_satisfied = sol.residuals[3] >= -1e-12;
  sol.cooperation_valid = plan.feasible;
  // With both common shares positive all four equalities are expected to bind.
  const double scale = std::max(params.p_u1_budget, params.p_u2_budget);
  const bool common = sol.alloc.pu1 > 1e-9 * scale && sol.alloc.pu2 > 1e-9 * scale;
  sol.interior = common && plan.rho_max - plan.rho_min > 1e-9;
  if (!common) sol.note = "no common message";
  return sol;
}

std::vector<std::pair<double, double>> default_weights(int count) {
  std::vector<std::pair<double, double>> w;
  count = std::max(count, 2);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    w.emplace_back(t, 1.0 - t);
  }
  return w;
}

BoundaryCurve coop_mdrb(const CoopParams& params,
                        const std::vector<std::pair<double, double>>& weights, CoopSolver solver,
                        const ScanConfig& scan) {
  params.validate();
  std::vector<RatePoint> pts(weights.size());
  std::vector<char> ok(weights.size(), 0);
  BoundaryCurve classical;
  bool have_classical = false;
  if (solver == CoopSolver::kClosed) {
    classical = mdrb_simultaneous(params.classical());
    have_classical = true;
  }
  detail::parallel_for(static_cast<int>(weights.size()), [&](int i) {
    const auto [mu1, mu2] = weights[i];
    if (!(mu1 >= 0.0 && mu2 >= 0.0 && mu1 + mu2 > 0.0)) return;
    const std::string tag = weight_tag(mu1, mu2);
    if (solver == CoopSolver::kGeneral) {
      try {
        const CoopSolution s = coop_solve_general(params, mu1, mu2, scan);
        pts[i] = {s.r1, s.r2, s.rho, tag};
        ok[i] = 1;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible) throw;
      }
      return;
    }
    CoopSolution s;
    bool valid = false;
    try {
      s = coop_solve_closed_form(params, mu1, mu2);
      valid = s.cooperation_valid;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingular) throw;
    }
    if (valid) {
      pts[i] = {s.r1, s.r2, s.rho, tag};
      ok[i] = 1;
    } else if (have_classical && !classical.empty()) {
      const RatePoint* best = classical.best_weighted(mu1, mu2);
      pts[i] = {best->r1, best->r2, best->rho, tag + ":classical"};
      ok[i] = 1;
    }
  });
  std::vector<RatePoint> kept;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (ok[i]) kept.push_back(pts[i]);
  }
  BoundaryCurve out = upper_hull(std::move(kept));
  if (out.empty()) out.empty_reason = "no weight pair produced a feasible point";
  return out;
}

BoundaryCurve coop_frontier(const CoopParams& params, int n_points) {
  params.validate();
  BoundaryCurve out;
  if (!coop_plan(params, 0.0, 0.0).feasible) {
    out.empty_reason = "no feasible rate pair";
    return out;
  }
  const int n = std::max(n_points, 2);
  const double top = coop_max_r2(params);
  std::vector<RatePoint> pts(n);
  detail::parallel_for(n, [&](int i) {
    const double r2 = top * i / (n - 1);
    const double r1 = std::max(coop_max_r1(params, r2), 0.0);
    pts[i] = {r1, r2, coop_plan(params, r1, r2).rho_min, "frontier"};
  });
  return upper_hull(std::move(pts));
}

}  // namespace swipt
