#include "swipt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "swipt/classical_sic.hpp"
#include "swipt/classical_simul.hpp"
#include "swipt/coop_mac.hpp"
#include "swipt/oracle.hpp"

namespace swipt {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string describe(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# scenario=" << to_string(cfg.scenario);
  if (cfg.scenario == Scenario::kCoop) {
    const CoopParams& c = cfg.coop;
    os << " eh=" << c.eh.describe() << " cost=" << c.cost_dest.describe()
       << " user_cost=" << c.cost_user1.describe() << " h1=" << num(c.h1) << " h2=" << num(c.h2)
       << " h12=" << num(c.h12) << " h21=" << num(c.h21);
  } else {
    const ClassicalParams& p = cfg.classical;
    os << " eh=" << p.eh.describe() << " cost=" << p.cost.describe() << " a_w=" << num(p.a());
  }
  os << "\n";
  return os.str();
}

void require_classical(const RunConfig& cfg, const char* what) {
  if (cfg.scenario == Scenario::kCoop) {
    throw Error(ErrorCode::kDomain, std::string(what) + " applies to the classical scenarios only");
  }
}

struct Check {
  std::ostringstream out;
  bool pass = true;

  void line(const std::string& name, double value, double bound, bool ok) {
    out << "  " << name << " = " << num(value) << " (bound " << num(bound) << ") "
        << (ok ? "ok" : "FAIL") << "\n";
    pass = pass && ok;
  }
  void below(const std::string& name, double value, double bound) {
    line(name, value, bound, std::fabs(value) < bound);
  }
};

bool p4_assumptions(const CoopParams& c) {
  const double beta = c.cost_dest.beta();
  auto same = [&](const CostModel& m) {
    return m.family() == CostModel::Family::kExp && std::fabs(m.beta() - beta) <= 1e-12 * beta;
  };
  return c.eh.is_linear() && same(c.cost_dest) && same(c.cost_user1) && same(c.cost_user2);
}

}  // namespace

double sumrate_at(const RunConfig& cfg, double rho, std::string* binding) {
  require_classical(cfg, "sumrate");
  const ClassicalParams& p = cfg.classical;
  const double have = p.harvested(rho);
  if (cfg.scenario == Scenario::kClassicalSimul) {
    const double bound = p.rate_sum(rho);
    const RateBound rb = p.cost.inverse(have);
    const bool rate_binds = rb.unbounded || rb.value >= bound;
    if (binding) *binding = rate_binds ? "rate" : "cost";
    return rate_binds ? bound : rb.value;
  }
  double best = 0.0;
  bool rate_binds = false;
  for (auto order : {DecodingOrder::kUser1First, DecodingOrder::kUser2First}) {
    const double b1 = sic_bound(p, order, 1, rho);
    const double b2 = sic_bound(p, order, 2, rho);
    const double c1 = p.cost.eval(b1);
    const double c2 = p.cost.eval(b2);
    auto take = [&](double v, bool both) {
      if (v > best) {
        best = v;
        rate_binds = both;
      }
    };
    if (c1 + c2 <= have) take(b1 + b2, true);
    if (c1 <= have) take(b1 + p.cost.inverse(have - c1).capped(b2), false);
    if (c2 <= have) take(b2 + p.cost.inverse(have - c2).capped(b1), false);
  }
  const RateBound alone = p.cost.inverse(have);
  const double single = std::max(alone.capped(p.rate_free(1, rho)), alone.capped(p.rate_free(2, rho)));
  if (single > best) {
    best = single;
    rate_binds = false;
  }
  if (binding) *binding = rate_binds ? "rate" : "cost";
  return best;
}

std::string cmd_region(const RunConfig& cfg) {
  BoundaryCurve curve;
  switch (cfg.scenario) {
    case Scenario::kClassicalSimul:
      curve = mdrb_simultaneous(cfg.classical, {cfg.n_points, cfg.time_sharing});
      break;
    case Scenario::kClassicalSic:
      curve = mdrb_sic(cfg.classical, {cfg.n_points, cfg.time_sharing});
      break;
    case Scenario::kCoop:
      curve = coop_mdrb(cfg.coop, default_weights(cfg.weights), cfg.coop_solver,
                        {cfg.coop_grid, 100});
      break;
  }
  std::ostringstream os;
  os << "# rates in bits per channel use, rho is the PS factor (dimensionless)\n";
  os << describe(cfg);
  os << "r2_bits,r1_bits,rho,order_or_weights,hulled\n";
  if (curve.empty()) {
    os << "# empty: " << (curve.empty_reason.empty() ? "no feasible rate pair" : curve.empty_reason)
       << "\n";
    return os.str();
  }
  for (const auto& p : curve.points) {
    os << num(p.r2) << ',' << num(p.r1) << ',' << num(p.rho) << ',' << p.tag << ','
       << (curve.hulled ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string cmd_sumrate(const RunConfig& cfg) {
  require_classical(cfg, "sumrate");
  std::ostringstream os;
  os << "# rates in bits per channel use, rho is the PS factor (dimensionless)\n";
  os << describe(cfg);
  os << "rho,sum_rate_bits,binding_constraint\n";
  const int n = cfg.rho_points;
  for (int i = 0; i < n; ++i) {
    const double rho = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    std::string binding;
    const double v = sumrate_at(cfg, rho, &binding);
    os << num(rho) << ',' << num(v) << ',' << binding << "\n";
  }
  try {
    const SolveReport rep = cfg.scenario == Scenario::kClassicalSimul
                                ? sumrate_simultaneous(cfg.classical)
                                : sic_sumrate_numeric(cfg.classical);
    os << num(rep.rho) << ',' << num(rep.sum_rate) << ",opt\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    os << "# no optimum: " << e.what() << "\n";
  }
  return os.str();
}

std::string cmd_coop(const RunConfig& cfg) {
  if (cfg.scenario != Scenario::kCoop) {
    throw Error(ErrorCode::kDomain, "coop needs scenario = coop");
  }
  std::ostringstream os;
  os << "# rates in bits per channel use, powers in W, rho is the PS factor\n";
  os << describe(cfg);
  os << "mu1,mu2,r1_bits,r2_bits,weighted_bits,rho,p12_w,p21_w,pu1_w,pu2_w,valid,note\n";
  for (const auto& [mu1, mu2] : default_weights(cfg.weights)) {
    CoopSolution s;
    if (cfg.coop_solver == CoopSolver::kClosed) {
      try {
        s = coop_solve_closed_form(cfg.coop, mu1, mu2);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSingular) throw;
        s.note = e.what();
      }
    } else {
      s = coop_solve_general(cfg.coop, mu1, mu2, {cfg.coop_grid, 100});
    }
    os << num(mu1) << ',' << num(mu2) << ',' << num(s.r1) << ',' << num(s.r2) << ','
       << num(s.weighted_rate) << ',' << num(s.rho) << ',' << num(s.alloc.p12) << ','
       << num(s.alloc.p21) << ',' << num(s.alloc.pu1) << ',' << num(s.alloc.pu2) << ','
       << (s.cooperation_valid ? "true" : "false") << ',' << s.note << "\n";
  }
  return os.str();
}

VerifyOutcome cmd_verify(const RunConfig& cfg) {
  Check ck;
  ck.out << "scenario " << to_string(cfg.scenario) << "\n";
  if (cfg.scenario == Scenario::kClassicalSimul) {
    const ClassicalParams& p = cfg.classical;
    const SolveReport rep = sumrate_simultaneous(p);
    const OracleResult orc = oracle_simul_sumrate(p, cfg.oracle_rho_step);
    ck.out << "  analytic: rho=" << num(rep.rho) << " sum_rate=" << num(rep.sum_rate) << "\n";
    ck.out << "  oracle:   rho=" << num(orc.rho) << " sum_rate=" << num(orc.sum_rate) << "\n";
    ck.below("|analytic - oracle| (bits)", rep.sum_rate - orc.sum_rate, 1e-4);
    if (p.cost.family() != CostModel::Family::kConst) {
      ck.below("cost/rate equality residual (W)", rep.residual, 1e-9);
    }
  } else if (cfg.scenario == Scenario::kClassicalSic) {
    const ClassicalParams& p = cfg.classical;
    const SolveReport rep = sic_sumrate_numeric(p);
    const OracleResult orc = oracle_sic_sumrate(p, cfg.oracle_rho_step);
    ck.out << "  numeric: rho=" << num(rep.rho) << " sum_rate=" << num(rep.sum_rate)
           << " order=" << rep.order << (rep.relabeled ? " (users relabeled)" : "") << "\n";
    ck.out << "  oracle:  rho=" << num(orc.rho) << " sum_rate=" << num(orc.sum_rate) << "\n";
    ck.below("|numeric - oracle| (bits)", rep.sum_rate - orc.sum_rate, 1e-4);
    if (p.cost.family() != CostModel::Family::kConst) {
      ck.below("harvested-power equality residual (W)", rep.residual, 1e-9);
    }
    if (p.eh.is_linear() && p.cost.family() == CostModel::Family::kExp) {
      const SicClosedForm cf = sic_sumrate_closed_form(p);
      ck.out << "  closed form: rho=" << num(cf.rho_opt) << " sum_rate=" << num(cf.sum_rate)
             << (cf.ordering_holds ? "" : " (root ordering violated)")
             << (cf.noise_warning ? " (N not small against N_p)" : "") << "\n";
      ck.below("|closed form - oracle| (bits)", cf.sum_rate - orc.sum_rate, 1e-4);
    }
  } else {
    const CoopParams& c = cfg.coop;
    const bool p4 = p4_assumptions(c);
    const bool oracle_ok = c.cost_user1.family() == CostModel::Family::kExp &&
                           c.cost_user2.family() == CostModel::Family::kExp;
    for (const auto& [mu1, mu2] : default_weights(cfg.verify_weights)) {
      const CoopSolution g = coop_solve_general(c, mu1, mu2, {cfg.coop_grid, 100});
      ck.out << "  weights " << num(mu1) << "/" << num(mu2) << ": general=" << num(g.weighted_rate)
             << " rho=" << num(g.rho);
      if (p4) {
        try {
          const CoopSolution cf = coop_solve_closed_form(c, mu1, mu2);
          ck.out << " closed_form=" << (cf.cooperation_valid ? num(cf.weighted_rate) : "invalid");
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kSingular) throw;
          ck.out << " closed_form=singular";
        }
      }
      ck.out << "\n";
      ck.below("    budget residual 1 (W)", g.residuals[0], 1e-9);
      ck.below("    budget residual 2 (W)", g.residuals[1], 1e-9);
      if (g.note.empty()) {
        ck.below("    destination cost residual (W)", g.residuals[2], 1e-9);
        ck.below("    destination rate residual (bits)", g.residuals[3], 1e-9);
      }
      if (oracle_ok) {
        const CoopSolution o = oracle_coop_weighted(c, mu1, mu2, {cfg.oracle_pu_points, cfg.oracle_pu_points});
        ck.below("    |general - oracle| (bits)", g.weighted_rate - o.weighted_rate, 5e-3);
      }
    }
  }
  ck.out << (ck.pass ? "PASS" : "FAIL") << "\n";
  return {ck.pass, ck.out.str()};
}

}  // namespace swipt
