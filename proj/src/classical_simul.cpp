#include "swipt/classical_simul.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swipt {

namespace {

double sum_signal(const ClassicalParams& p) { return p.signal1() + p.signal2(); }

// Rate-space difference between the cost-supported rate and a rate bound.
double rate_gap(const ClassicalParams& p, double rho, double bound) {
  const RateBound rb = p.cost.inverse(p.harvested(rho));
  if (rb.unbounded) return 1.0;
  return rb.value - bound;
}

bool is_const(const ClassicalParams& p) { return p.cost.family() == CostModel::Family::kConst; }

double const_threshold_rho(const ClassicalParams& p, double need, const RootConfig& cfg) {
  if (need <= 0.0) return 0.0;
  return bisect_predicate([&](double r) { return p.harvested(r) >= need; }, 0.0, 1.0, cfg);
}

}  // namespace

double simul_cost_rate(const ClassicalParams& params, double rho, double cap) {
  return params.cost.inverse(params.harvested(rho)).capped(cap);
}

double simul_gamma(const ClassicalParams& params, int which, double x) {
  const double f = params.cost.inverse(params.harvested(x)).capped(std::numeric_limits<double>::infinity());
  const double y = 1.0 - x;
  const double nd = params.decoder_noise();
  double g = std::exp2(2.0 * f) * (y * nd + params.n_p) - y * (sum_signal(params) + nd);
  if (which == 1) g += y * params.signal1();
  if (which == 2) g += y * params.signal2();
  return g;
}

bool simul_feasible(const ClassicalParams& params, const RatePoint& point, double tol) {
  const double rho = point.rho;
  if (point.r1 < 0.0 || point.r2 < 0.0 || rho < 0.0 || rho > 1.0) return false;
  const double sum = point.r1 + point.r2;
  if (point.r1 > params.rate_free(1, rho) + tol) return false;
  if (point.r2 > params.rate_free(2, rho) + tol) return false;
  if (sum > params.rate_sum(rho) + tol) return false;
  const double need = params.cost.eval(sum);
  const double have = params.harvested(rho);
  return need <= have + tol * std::max(1.0, have);
}

SimulBreakpoints simul_breakpoints(const ClassicalParams& params, const RootConfig& cfg) {
  params.validate();
  const double top = params.harvested(1.0);
  if (!(top > 0.0)) throw Error(ErrorCode::kInfeasible, "no power is harvested at any PS factor");
  SimulBreakpoints bp;
  if (is_const(params)) {
    if (top < params.cost.phi0()) {
      throw Error(ErrorCode::kInfeasible, "harvested power stays below the constant decoding cost");
    }
    bp.rho_c = const_threshold_rho(params, params.cost.phi0(), cfg);
    bp.rho_1 = bp.rho_c;
    bp.rho_2 = bp.rho_c;
  } else {
    bp.rho_c = bisect_root([&](double r) { return rate_gap(params, r, params.rate_sum(r)); }, 0.0,
                           1.0, cfg);
    bp.rho_1 = bisect_root([&](double r) { return rate_gap(params, r, params.rate_free(2, r)); },
                           0.0, bp.rho_c, cfg);
    bp.rho_2 = bisect_root([&](double r) { return rate_gap(params, r, params.rate_free(1, r)); },
                           0.0, bp.rho_c, cfg);
  }
  bp.residual_c = simul_gamma(params, 0, bp.rho_c) - params.n_p;
  bp.residual_1 = simul_gamma(params, 1, bp.rho_1) - params.n_p;
  bp.residual_2 = simul_gamma(params, 2, bp.rho_2) - params.n_p;
  return bp;
}

bool cost_rate_convex(const ClassicalParams& params, double lo, double hi, int samples) {
  if (!(hi > lo) || samples < 3) return true;
  auto f = [&](double x) {
    return params.cost.inverse(params.eh.eval(x)).capped(std::numeric_limits<double>::infinity());
  };
  const double h = (hi - lo) / (samples - 1);
  double f0 = f(lo);
  double f1 = f(lo + h);
  double scale = std::max({std::fabs(f0), std::fabs(f1), 1.0});
  for (int i = 2; i < samples; ++i) {
    const double f2 = f(i == samples - 1 ? hi : lo + h * i);
    if (!std::isfinite(f2)) return false;
    scale = std::max(scale, std::fabs(f2));
    if (f2 - 2.0 * f1 + f0 < -1e-12 * scale) return false;
    f0 = f1;
    f1 = f2;
  }
  return true;
}

BoundaryCurve mdrb_simultaneous(const ClassicalParams& params, const SimulOptions& opts) {
  SimulBreakpoints bp;
  try {
    bp = simul_breakpoints(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    BoundaryCurve empty;
    empty.empty_reason = e.what();
    return empty;
  }
  const int n = std::max(opts.n_points, 2);
  std::vector<RatePoint> pts;
  if (is_const(params)) {
    const double r = bp.rho_c;
    const double g1 = params.rate_free(1, r);
    const double g2 = params.rate_free(2, r);
    const double gs = params.rate_sum(r);
    pts = {{g1, 0.0, r, "joint"}, {g1, gs - g1, r, "joint"}, {gs - g2, g2, r, "joint"},
           {0.0, g2, r, "joint"}};
  } else {
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double r = bp.rho_2 + (bp.rho_c - bp.rho_2) * i / (n - 1);
      const double r1 = params.rate_free(1, r);
      pts.push_back({r1, std::max(simul_cost_rate(params, r, inf) - r1, 0.0), r, "joint"});
    }
    for (int i = 0; i < n; ++i) {
      const double r = bp.rho_1 + (bp.rho_c - bp.rho_1) * i / (n - 1);
      const double r2 = params.rate_free(2, r);
      pts.push_back({std::max(simul_cost_rate(params, r, inf) - r2, 0.0), r2, r, "joint"});
    }
  }
  const double a = params.a();
  const bool convex =
      is_const(params) || cost_rate_convex(params, a * std::min(bp.rho_1, bp.rho_2), a * bp.rho_c);
  BoundaryCurve curve = pareto_frontier(pts);
  if (opts.time_sharing && (!convex || !is_concave(curve))) return upper_hull(std::move(pts));
  return curve;
}

double simul_sumrate_residual(const ClassicalParams& params, double rho) {
  return params.cost.eval(params.rate_sum(rho)) - params.harvested(rho);
}

SolveReport sumrate_simultaneous(const ClassicalParams& params, const RootConfig& cfg) {
  params.validate();
  SolveReport rep;
  rep.upper_bound = params.cost.inverse(params.harvested(1.0))
                        .capped(std::numeric_limits<double>::infinity());
  if (is_const(params)) {
    const SimulBreakpoints bp = simul_breakpoints(params, cfg);
    rep.rho = bp.rho_c;
    rep.residual = params.harvested(rep.rho) - params.cost.phi0();
    rep.binding = "rate";
  } else {
    rep.rho = bisect_root([&](double r) { return simul_sumrate_residual(params, r); }, 0.0, 1.0, cfg);
    rep.residual = simul_sumrate_residual(params, rep.rho);
    rep.binding = "rate=cost";
  }
  rep.sum_rate = params.rate_sum(rep.rho);
  rep.r2 = params.rate_free(2, rep.rho);
  rep.r1 = std::max(rep.sum_rate - rep.r2, 0.0);
  if (rep.sum_rate > rep.upper_bound + 1e-9) {
    throw Error(ErrorCode::kInternal, "sum rate exceeds the harvested-power bound");
  }
  return rep;
}

double simul_closed_form_rho(const ClassicalParams& params) {
  if (!params.eh.is_linear() || params.cost.family() != CostModel::Family::kExp) {
    throw Error(ErrorCode::kDomain, "closed form needs linear EH and exponential cost");
  }
  const double beta = params.cost.beta();
  const double s = sum_signal(params);
  return beta * s / (beta * s + params.eh.eta() * params.a() * params.n_p);
}

}  // namespace swipt
