// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "swipt/classical_sic.hpp"
#include "swipt/classical_simul.hpp"
#include "swipt/commands.hpp"
#include "swipt/coop_mac.hpp"
#include "swipt/error.hpp"
#include "swipt/oracle.hpp"
#include "swipt/run_config.hpp"

using namespace swipt;
using namespace swipt::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome eh_model() {
  const ClassicalParams p = classical(CostModel::exponential(1e-3));
  const auto t0 = std::chrono::steady_clock::now();
  const double at_zero = p.eh.eval(0.0);
  const double at_a = p.eh.eval(p.a());
  const double t = seconds_since(t0);
  const bool ok = std::fabs(at_zero) <= 1e-15 && std::fabs(at_a - 0.024) < 1e-4 && t < 1e-3;
  return {ok, fmt("psi(0)=%.3g W, psi(a)=%.9f W (a=%.9f W), %.1f us", at_zero, at_a, p.a(), t * 1e6)};
}

Outcome fixed_point() {
  ClassicalParams p = classical(CostModel::exponential(1e-3), EhModel::linear(1.0));
  p.neglect_decoder_noise = true;
  const ClassicalParams q = classical(CostModel::exponential(1e-3));
  const auto t0 = std::chrono::steady_clock::now();
  const SolveReport r = sumrate_simultaneous(p);
  const SolveReport rl = sumrate_simultaneous(q);
  const double t = seconds_since(t0);
  const double closed = simul_closed_form_rho(p);
  const double res = std::fabs(simul_sumrate_residual(p, r.rho));
  const double res_logistic = std::fabs(simul_sumrate_residual(q, rl.rho));
  const double gap = std::fabs(r.rho - closed);
  const bool ok = res < 1e-9 && res_logistic < 1e-9 && gap < 1e-9 && t < 1e-2;
  return {ok, fmt("rho=%.12f closed=%.12f |gap|=%.2g residual=%.2g (logistic %.2g), %.2f ms",
                  r.rho, closed, gap, res, res_logistic, t * 1e3)};
}

Outcome sic_closed_form() {
  std::mt19937_64 rng(20261016);
  const auto t0 = std::chrono::steady_clock::now();
  double worst_num = 0.0, worst_oracle = 0.0;
  int ordering_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const ClassicalParams p = random_closed_form_draw(rng);
    const SicClosedForm cf = sic_sumrate_closed_form(p);
    const double num = sic_sumrate_numeric(p).sum_rate;
    const double orc = oracle_sic_sumrate(p, 1e-5).sum_rate;
    worst_num = std::max(worst_num, std::fabs(cf.sum_rate - num));
    worst_oracle = std::max(worst_oracle, std::fabs(cf.sum_rate - orc));
    if (!cf.ordering_holds) ++ordering_failures;
  }
  const double t = seconds_since(t0);
  const bool ok = worst_num < 1e-6 && worst_oracle < 1e-4 && ordering_failures == 0 && t < 60.0;
  return {ok, fmt("100 draws: max|closed-numeric|=%.2g, max|closed-oracle|=%.2g, ordering "
                  "failures=%d, %.1f s",
                  worst_num, worst_oracle, ordering_failures, t)};
}

Outcome region_orderings() {
  const auto t0 = std::chrono::steady_clock::now();
  auto pair = [](CostModel cost) {
    const ClassicalParams p = classical(cost);
    return std::pair{mdrb_simultaneous(p), mdrb_sic(p)};
  };
  const auto [exp_sim, exp_sic] = pair(CostModel::exponential(1e-3));
  const auto [log_sim, log_sic] = pair(CostModel::logarithmic(1e-3));
  const auto [lin_sim, lin_sic] = pair(CostModel::linear(1e-3));
  const bool a = dominates(exp_sic, exp_sim, 1e-6);
  const bool b = dominates(log_sim, log_sic, 1e-6);
  const double haus = hausdorff(lin_sim, lin_sic);
  const bool c = haus < 1e-6;

  auto both_positive = [](const BoundaryCurve& curve) {
    return std::any_of(curve.points.begin(), curve.points.end(),
                       [](const RatePoint& pt) { return pt.r1 > 1e-9 && pt.r2 > 1e-9; });
  };
  const ClassicalParams c13 = classical(CostModel::constant(0.013));
  const BoundaryCurve sic13 = mdrb_sic(c13, {512, false});
  const BoundaryCurve sim13 = mdrb_simultaneous(c13, {512, false});
  const ClassicalParams c25 = classical(CostModel::constant(0.025));
  const bool empty25 = mdrb_sic(c25).empty() && mdrb_simultaneous(c25).empty();
  const bool d = !sic13.empty() && !both_positive(sic13) && both_positive(sim13) && empty25;
  const double t = seconds_since(t0);
  return {a && b && c && d && t < 30.0,
          fmt("(a) exp margin %.2g %s, (b) log margin %.2g %s, (c) lin hausdorff %.2g %s, "
              "(d) const %s, %.2f s",
              dominance_margin(exp_sic, exp_sim), a ? "ok" : "FAIL",
              dominance_margin(log_sim, log_sic), b ? "ok" : "FAIL", haus, c ? "ok" : "FAIL",
              d ? "ok" : "FAIL", t)};
}

Outcome saturation() {
  const auto t0 = std::chrono::steady_clock::now();
  auto sweep = [](double beta) {
    RunConfig cfg = build_config({{"beta", fmt("%.17g", beta)}}, "fig4a");
    std::vector<double> s(cfg.rho_points);
    for (int i = 0; i < cfg.rho_points; ++i) {
      s[i] = sumrate_at(cfg, static_cast<double>(i) / (cfg.rho_points - 1), nullptr);
    }
    return s;
  };
  const std::vector<double> heavy = sweep(0.1);
  const std::vector<double> light = sweep(0.01);
  const double ceiling = CostModel::exponential(0.1).inverse(0.024).capped(1e300);
  const int n = static_cast<int>(heavy.size());
  double worst = 0.0;
  int first_off = -1;
  for (int i = n - (n - 1) / 10 - 1; i < n; ++i) {
    const double dev = std::fabs(heavy[i] - ceiling);
    worst = std::max(worst, dev);
    if (dev >= 1e-3 && first_off < 0) first_off = i;
  }
  const double plateau_heavy = *std::max_element(heavy.begin(), heavy.end());
  const double plateau_light = *std::max_element(light.begin(), light.end());
  const bool flat = worst < 1e-3;
  const bool ordered = plateau_light > plateau_heavy;
  const double t = seconds_since(t0);
  const std::string off =
      first_off < 0 ? "none" : fmt("%.3f", static_cast<double>(first_off) / (n - 1));
  return {flat && ordered && t < 10.0,
          fmt("ceiling %.6f; last-10%% max deviation %.4f (off-plateau from rho=%s) %s; "
              "plateau beta=0.01 %.6f > beta=0.1 %.6f %s, %.2f s",
              ceiling, worst, off.c_str(), flat ? "ok" : "FAIL", plateau_light, plateau_heavy,
              ordered ? "ok" : "FAIL", t)};
}

Outcome stationarity() {
  std::mt19937_64 rng(20261016);
  const auto t0 = std::chrono::steady_clock::now();
  int valid = 0, attempts = 0, singular = 0, gradient_undefined = 0;
  double worst_eq = 0.0, worst_grad = 0.0, worst_budget = 0.0, worst_gap = 0.0;
  std::string reason;
  while (valid < 50 && attempts < 1000) {
    ++attempts;
    const CoopParams c = random_coop_draw(rng);
    const double mu1 = uniform(rng, 0.05, 0.95);
    CoopSolution s;
    try {
      s = coop_solve_closed_form(c, mu1, 1.0 - mu1);
    } catch (const Error&) {
      ++singular;
      continue;
    }
    worst_eq = std::max({worst_eq, std::fabs(s.terms.stationary_residual1), std::fabs(s.terms.stationary_residual2)});
    if (std::isfinite(s.terms.gradient_norm)) {
      worst_grad = std::max(worst_grad, s.terms.gradient_norm);
    } else {
      ++gradient_undefined;
    }
    if (!s.cooperation_valid) {
      if (reason.empty()) reason = s.note;
      continue;
    }
    ++valid;
    worst_budget = std::max({worst_budget, std::fabs(s.residuals[0]), std::fabs(s.residuals[1])});
    const CoopSolution g = coop_solve_general(c, mu1, 1.0 - mu1);
    worst_gap = std::max(worst_gap, std::fabs(g.weighted_rate - s.weighted_rate));
  }
  const double t = seconds_since(t0);
  const bool ok = valid == 50 && worst_eq < 1e-9 && worst_grad < 1e-6 &&
                  gradient_undefined == 0 && worst_budget < 1e-9 && worst_gap < 1e-4 && t < 120.0;
  return {ok, fmt("%d valid of %d draws (%d singular, first rejection: %s); over all draws: "
                  "stationary-system residual %.2g, gradient undefined at %d (finite max %.2g); "
                  "valid draws: budget residual %.2g, general gap %.2g, %.1f s",
                  valid, attempts, singular, reason.empty() ? "none" : reason.c_str(), worst_eq,
                  gradient_undefined, worst_grad, worst_budget, worst_gap, t)};
}

Outcome crossover() {
  const auto t0 = std::chrono::steady_clock::now();
  auto margin = [](double beta, double h_u) {
    const CoopParams c = coop(beta, h_u);
    const BoundaryCurve m = coop_mdrb(c, default_weights(101), CoopSolver::kGeneral);
    const BoundaryCurve cl = mdrb_simultaneous(c.classical());
    return std::pair{dominates(m, cl, 1e-6), dominance_margin(m, cl)};
  };
  const double beta21 = std::pow(10.0, -2.1);
  const auto [a, ma] = margin(1e-3, 0.008);
  const auto [b, mb] = margin(1e-3, 0.002);
  const auto [c, mc] = margin(beta21, 0.008);
  const double t = seconds_since(t0);
  return {a && !b && !c && t < 60.0,
          fmt("(h_u=0.008, -30 dBW) dominates=%d margin %.3g %s; (0.002, -30 dBW) dominates=%d "
              "margin %.3g %s; (0.008, -21 dBW) dominates=%d margin %.3g %s, %.1f s",
              a, ma, a ? "ok" : "FAIL", b, mb, !b ? "ok" : "FAIL", c, mc, !c ? "ok" : "FAIL", t)};
}

ClassicalParams random_classical(std::mt19937_64& rng, int i) {
  ClassicalParams p;
  p.h1_sq = log_uniform(rng, -2.5, -1.5);
  p.h2_sq = log_uniform(rng, -2.5, -1.5);
  p.p1 = uniform(rng, 0.1, 1.0);
  p.p2 = uniform(rng, 0.1, 1.0);
  p.n = 1e-6;
  p.n_p = log_uniform(rng, -3.5, -2.5);
  p.eh = i % 2 == 0 ? logistic_eh() : EhModel::linear(uniform(rng, 0.3, 1.0));
  const double beta = log_uniform(rng, -3.5, -2.0);
  switch (i % 3) {
    case 0: p.cost = CostModel::exponential(beta); break;
    case 1: p.cost = CostModel::logarithmic(beta); break;
    default: p.cost = CostModel::linear(beta); break;
  }
  return p;
}

Outcome oracle_suite() {
  std::mt19937_64 rng(20261016);
  const auto t0 = std::chrono::steady_clock::now();
  double simul_gap = 0.0, sic_gap = 0.0, coop_gap = 0.0;
  double lemma1 = 0.0, lemma3 = 0.0, lemma5 = 0.0;
  int coop_skipped = 0;
  for (int i = 0; i < 50; ++i) {
    const ClassicalParams p = random_classical(rng, i);
    const SolveReport s = sumrate_simultaneous(p);
    simul_gap = std::max(simul_gap, std::fabs(s.sum_rate - oracle_simul_sumrate(p, 1e-5).sum_rate));
    lemma1 = std::max({lemma1, std::fabs(simul_sumrate_residual(p, s.rho)),
                       std::fabs(p.cost.eval(s.sum_rate) - p.harvested(s.rho))});
    const SolveReport q = sic_sumrate_numeric(p);
    sic_gap = std::max(sic_gap, std::fabs(q.sum_rate - oracle_sic_sumrate(p, 1e-5).sum_rate));
    lemma3 = std::max(lemma3, std::fabs(q.residual));
  }
  for (int i = 0; i < 50; ++i) {
    CoopParams c = random_coop_draw(rng);
    if (i % 2 == 0) c.eh = logistic_eh();
    const double mu1 = uniform(rng, 0.0, 1.0);
    const CoopSolution g = coop_solve_general(c, mu1, 1.0 - mu1);
    if (!g.cooperation_valid) {
      ++coop_skipped;
      continue;
    }
    const CoopSolution o = oracle_coop_weighted(c, mu1, 1.0 - mu1);
    coop_gap = std::max(coop_gap, std::fabs(g.weighted_rate - o.weighted_rate));
    if (!g.interior) {
      lemma5 = std::max({lemma5, std::fabs(g.residuals[0]), std::fabs(g.residuals[1]),
                         std::fabs(g.residuals[2])});
    }
  }
  const double t = seconds_since(t0);
  const bool ok = simul_gap < 1e-4 && sic_gap < 1e-4 && coop_gap < 5e-3 && lemma1 < 1e-9 &&
                  lemma3 < 1e-9 && lemma5 < 1e-9 && coop_skipped == 0 && t < 300.0;
  return {ok, fmt("max gaps: simul %.2g, sic %.2g, coop %.2g (%d skipped); equality residuals "
                  "%.2g / %.2g / %.2g, %.1f s",
                  simul_gap, sic_gap, coop_gap, coop_skipped, lemma1, lemma3, lemma5, t)};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, eh_model},      {2, fixed_point}, {3, sic_closed_form}, {4, region_orderings},
      {5, saturation},    {6, stationarity}, {7, crossover},      {8, oracle_suite},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
