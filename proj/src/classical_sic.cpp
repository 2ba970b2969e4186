#include "swipt/classical_sic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swipt {

namespace {

bool is_const(const ClassicalParams& p) { return p.cost.family() == CostModel::Family::kConst; }

// Rate left for one user after the other is paid for, capped at its own bound.
double leftover_rate(const ClassicalParams& p, double rho, double paid, double cap) {
  const double left = std::max(p.harvested(rho) - paid, 0.0);
  return p.cost.inverse(left).capped(cap);
}

double threshold_rho(const ClassicalParams& p, double need, const RootConfig& cfg) {
  if (need <= 0.0) return 0.0;
  return bisect_predicate([&](double r) { return p.harvested(r) >= need; }, 0.0, 1.0, cfg);
}

struct Segments {
  SicBreakpoints bp;
  // f_a: user 2 at its bound, user 1 gets the rest; f_b: the reverse.
  double f_a(const ClassicalParams& p, double rho, double* r1, double* r2) const {
    const double b2 = sic_bound(p, bp.order, 2, rho);
    const double b1 = sic_bound(p, bp.order, 1, rho);
    *r2 = b2;
    *r1 = leftover_rate(p, rho, p.cost.eval(b2), b1);
    return *r1 + *r2;
  }
  double f_b(const ClassicalParams& p, double rho, double* r1, double* r2) const {
    const double b2 = sic_bound(p, bp.order, 2, rho);
    const double b1 = sic_bound(p, bp.order, 1, rho);
    *r1 = b1;
    *r2 = leftover_rate(p, rho, p.cost.eval(b1), b2);
    return *r1 + *r2;
  }
};

}  // namespace

double sic_bound(const ClassicalParams& params, DecodingOrder order, int user, double rho) {
  const bool first = (user == 1) == (order == DecodingOrder::kUser1First);
  return first ? params.rate_interfered(user, rho) : params.rate_free(user, rho);
}

bool sic_feasible(const ClassicalParams& params, const RatePoint& point, DecodingOrder order,
                  double tol) {
  const double rho = point.rho;
  if (point.r1 < 0.0 || point.r2 < 0.0 || rho < 0.0 || rho > 1.0) return false;
  if (point.r1 > sic_bound(params, order, 1, rho) + tol) return false;
  if (point.r2 > sic_bound(params, order, 2, rho) + tol) return false;
  const double need = params.cost.eval(point.r1) + params.cost.eval(point.r2);
  const double have = params.harvested(rho);
  return need <= have + tol * std::max(1.0, have);
}

double sic_gamma(const ClassicalParams& params, DecodingOrder order, int which, double x) {
  double need = 0.0;
  if (which != 1) need += params.cost.eval(sic_bound(params, order, 1, x));
  if (which != 2) need += params.cost.eval(sic_bound(params, order, 2, x));
  if (need >= params.eh.ceiling()) return std::numeric_limits<double>::infinity();
  try {
    return params.eh.inverse(need) / x;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

SicBreakpoints sic_breakpoints(const ClassicalParams& params, DecodingOrder order,
                               const RootConfig& cfg) {
  params.validate();
  const double top = params.harvested(1.0);
  if (!(top > 0.0)) throw Error(ErrorCode::kInfeasible, "no power is harvested at any PS factor");
  SicBreakpoints bp;
  bp.order = order;
  if (is_const(params)) {
    const double phi0 = params.cost.phi0();
    if (top < phi0) {
      throw Error(ErrorCode::kInfeasible, "harvested power stays below the constant decoding cost");
    }
    bp.rho_1 = bp.rho_2 = threshold_rho(params, phi0, cfg);
    bp.rho_c = top >= 2.0 * phi0 ? threshold_rho(params, 2.0 * phi0, cfg) : 1.0;
  } else {
    auto cost_of = [&](int user, double r) {
      return params.cost.eval(sic_bound(params, order, user, r));
    };
    bp.rho_c = bisect_root(
        [&](double r) { return cost_of(1, r) + cost_of(2, r) - params.harvested(r); }, 0.0, 1.0,
        cfg);
    bp.rho_1 = bisect_root([&](double r) { return cost_of(2, r) - params.harvested(r); }, 0.0,
                           bp.rho_c, cfg);
    bp.rho_2 = bisect_root([&](double r) { return cost_of(1, r) - params.harvested(r); }, 0.0,
                           bp.rho_c, cfg);
  }
  const double a = params.a();
  bp.residual_c = sic_gamma(params, order, 0, bp.rho_c) - a;
  bp.residual_1 = sic_gamma(params, order, 1, bp.rho_1) - a;
  bp.residual_2 = sic_gamma(params, order, 2, bp.rho_2) - a;
  return bp;
}

std::vector<RatePoint> sic_order_points(const ClassicalParams& params, DecodingOrder order,
                                        int n_points) {
  const SicBreakpoints bp = sic_breakpoints(params, order);
  const std::string tag = to_string(order);
  std::vector<RatePoint> pts;
  if (is_const(params)) {
    const double rs = bp.rho_1;
    pts.push_back({params.rate_free(1, rs), 0.0, rs, tag});
    pts.push_back({0.0, params.rate_free(2, rs), rs, tag});
    if (params.harvested(1.0) >= 2.0 * params.cost.phi0()) {
      const double rb = bp.rho_c;
      pts.push_back({sic_bound(params, order, 1, rb), sic_bound(params, order, 2, rb), rb, tag});
    }
    return pts;
  }
  const Segments seg{bp};
  const int n = std::max(n_points, 2);
  double r1 = 0.0;
  double r2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double rho = bp.rho_1 + (bp.rho_c - bp.rho_1) * i / (n - 1);
    seg.f_a(params, rho, &r1, &r2);
    pts.push_back({r1, r2, rho, tag});
  }
  for (int i = 0; i < n; ++i) {
    const double rho = bp.rho_2 + (bp.rho_c - bp.rho_2) * i / (n - 1);
    seg.f_b(params, rho, &r1, &r2);
    pts.push_back({r1, r2, rho, tag});
  }
  return pts;
}

BoundaryCurve mdrb_sic(const ClassicalParams& params, const SicOptions& opts) {
  std::vector<RatePoint> pts;
  std::string reason;
  for (auto order : {DecodingOrder::kUser1First, DecodingOrder::kUser2First}) {
    try {
      auto part = sic_order_points(params, order, opts.n_points);
      pts.insert(pts.end(), part.begin(), part.end());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      reason = e.what();
    }
  }
  if (pts.empty()) {
    BoundaryCurve empty;
    empty.empty_reason = reason;
    return empty;
  }
  return opts.time_sharing ? upper_hull(std::move(pts)) : pareto_frontier(std::move(pts));
}

SolveReport sic_sumrate_numeric(const ClassicalParams& params_in,
                                const SicSumrateOptions& opts) {
  params_in.validate();
  const bool relabel = params_in.signal2() > params_in.signal1();
  const ClassicalParams params = relabel ? params_in.swapped() : params_in;

  SolveReport rep;
  rep.relabeled = relabel;
  rep.grid_points = opts.scan.grid_points;
  rep.upper_bound = params.rate_sum(0.0);

  auto add = [&](const std::string& label, double rho, double r1, double r2) {
    rep.candidates.push_back({label, rho, r1, r2, r1 + r2});
  };

  for (auto order : {DecodingOrder::kUser1First, DecodingOrder::kUser2First}) {
    SicBreakpoints bp;
    try {
      bp = sic_breakpoints(params, order);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      continue;
    }
    const std::string name = to_string(order);
    if (is_const(params)) {
      const double rs = bp.rho_1;
      add(name + ":single-1", rs, params.rate_free(1, rs), 0.0);
      add(name + ":single-2", rs, 0.0, params.rate_free(2, rs));
      if (params.harvested(1.0) >= 2.0 * params.cost.phi0()) {
        const double rb = bp.rho_c;
        add(name + ":both", rb, sic_bound(params, order, 1, rb), sic_bound(params, order, 2, rb));
      }
      continue;
    }
    const Segments seg{bp};
    double r1 = 0.0;
    double r2 = 0.0;
    auto fa = [&](double rho) { return seg.f_a(params, rho, &r1, &r2); };
    auto fb = [&](double rho) {
      if (!opts.alternate_f2) return seg.f_b(params, rho, &r1, &r2);
      r1 = sic_bound(params, order, 1, rho);
      r2 = leftover_rate(params, rho, params.cost.eval(sic_bound(params, order, 2, rho)),
                         std::numeric_limits<double>::infinity());
      return r1 + r2;
    };
    auto eval_add = [&](const std::string& label, const ScalarFn& f, double rho) {
      f(rho);
      add(label, rho, r1, r2);
    };
    eval_add(name + ":a:lo", fa, bp.rho_1);
    eval_add(name + ":a:hi", fa, bp.rho_c);
    eval_add(name + ":b:lo", fb, bp.rho_2);
    eval_add(name + ":b:hi", fb, bp.rho_c);
    for (double x : critical_points(fa, bp.rho_1, bp.rho_c, opts.scan)) {
      eval_add(name + ":a:crit", fa, x);
    }
    for (double x : critical_points(fb, bp.rho_2, bp.rho_c, opts.scan)) {
      eval_add(name + ":b:crit", fb, x);
    }
  }
  if (rep.candidates.empty()) {
    throw Error(ErrorCode::kInfeasible, "no decoding order admits a positive rate");
  }
  const Candidate* best = &rep.candidates.front();
  for (const auto& c : rep.candidates) {
    if (c.value > best->value) best = &c;
  }
  rep.rho = best->rho;
  rep.sum_rate = best->value;
  rep.r1 = best->r1;
  rep.r2 = best->r2;
  rep.residual = params.cost.eval(rep.r1) + params.cost.eval(rep.r2) - params.harvested(rep.rho);
  const auto colon = best->label.find(':');
  rep.order = best->label.substr(0, colon);
  rep.binding = best->label.substr(colon + 1);
  if (relabel) {
    // Report in the caller's labels.
    auto flip = [](std::string& label) {
      const std::string one = to_string(DecodingOrder::kUser1First);
      const std::string two = to_string(DecodingOrder::kUser2First);
      if (label.rfind(one, 0) == 0) {
        label.replace(0, one.size(), two);
      } else if (label.rfind(two, 0) == 0) {
        label.replace(0, two.size(), one);
      }
    };
    std::swap(rep.r1, rep.r2);
    flip(rep.order);
    for (auto& c : rep.candidates) {
      std::swap(c.r1, c.r2);
      flip(c.label);
    }
  }
  return rep;
}

SicClosedForm sic_sumrate_closed_form(const ClassicalParams& params_in) {
  params_in.validate();
  if (!params_in.eh.is_linear() || params_in.cost.family() != CostModel::Family::kExp) {
    throw Error(ErrorCode::kDomain, "closed form needs linear EH and exponential cost");
  }
  SicClosedForm out;
  out.relabeled = params_in.signal2() > params_in.signal1();
  const ClassicalParams p = out.relabeled ? params_in.swapped() : params_in;
  const double A = p.signal1();
  const double B = p.signal2();
  const double C = A + B;
  const double beta = p.cost.beta();
  const double eta = p.eh.eta();
  const double a = p.a();
  const double np = p.n_p;
  const double ea = eta * a;
  out.a_term = A;
  out.b_term = B;
  out.c_term = C;
  out.noise_warning = p.n > np / 100.0;

  const double rad = (ea * B - beta * C) * (ea * B - beta * C) +
                     ea * (ea * np * np + 2.0 * ea * np * B + 2.0 * beta * C * np +
                           4.0 * beta * B * B);
  if (!(rad >= 0.0)) throw Error(ErrorCode::kInternal, "negative discriminant in closed form");
  out.delta = np * std::sqrt(rad);
  // Smaller root of the quadratic in rho, written without cancellation.
  const double lin = ea * np * (B + np) + beta * (2.0 * B * B + C * np);
  const double cst = beta * (B * B + A * np + B * np);
  out.rho_opt = 2.0 * cst / (lin + out.delta);
  out.rho_1 = out.rho_opt;
  out.rho_2 = beta * B / (beta * B + ea * np);
  out.rho_ceiling = B > 0.0 ? 0.5 * (1.0 + (beta * B * B + ea * np * np) / ((beta * B + ea * np) * B))
                            : std::numeric_limits<double>::infinity();
  out.ordering_holds = out.rho_2 < out.rho_opt && out.rho_opt <= out.rho_ceiling;
  out.r1 = p.rate_interfered(1, out.rho_opt);
  out.r2 = p.rate_free(2, out.rho_opt);
  out.sum_rate = out.r1 + out.r2;
  if (out.relabeled) std::swap(out.r1, out.r2);
  return out;
}

}  // namespace swipt
