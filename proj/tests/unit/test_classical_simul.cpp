#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "swipt/classical_sic.hpp"
#include "swipt/classical_simul.hpp"
#include "swipt/error.hpp"
#include "swipt/oracle.hpp"

using namespace swipt;
using swipt::testing::classical;

namespace {

ClassicalParams linear_no_noise(double beta) {
  ClassicalParams p = classical(CostModel::exponential(beta), EhModel::linear(1.0));
  p.neglect_decoder_noise = true;
  return p;
}

}  // namespace

TEST_CASE("closed-form PS factor for linear EH") {
  const ClassicalParams p = linear_no_noise(1e-3);
  const double a = p.a();
  const double expected = 1e-3 * (a - p.n) / (1e-3 * (a - p.n) + a * p.n_p);
  CHECK(simul_closed_form_rho(p) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::fabs(simul_breakpoints(p).rho_c - expected) < 1e-6);
  const SolveReport r = sumrate_simultaneous(p);
  CHECK(std::fabs(r.rho - expected) < 1e-9);
  CHECK(std::fabs(r.rho - 0.49998) < 1e-4);
  CHECK(std::fabs(r.sum_rate - half_log2_1p((1 - r.rho) * (a - p.n) / p.n_p)) < 1e-12);
  CHECK(std::fabs(r.sum_rate - 1.4215) < 1e-3);
}

TEST_CASE("breakpoints in the free-decoding limit") {
  const ClassicalParams p = classical(CostModel::exponential(1e-12));
  const SimulBreakpoints b = simul_breakpoints(p);
  CHECK(b.rho_c < 1e-6);
  CHECK(b.rho_1 <= b.rho_c);
  CHECK(b.rho_2 <= b.rho_c);
}

TEST_CASE("breakpoint residuals at the evaluation setup") {
  const ClassicalParams p = classical(CostModel::exponential(1e-3));
  const SimulBreakpoints b = simul_breakpoints(p);
  CHECK(std::fabs(simul_gamma(p, 0, b.rho_c) - p.n_p) < 1e-10);
  CHECK(std::fabs(simul_gamma(p, 1, b.rho_1) - p.n_p) < 1e-10);
  CHECK(std::fabs(simul_gamma(p, 2, b.rho_2) - p.n_p) < 1e-10);
  CHECK(std::fabs(b.residual_c) < 1e-10);
  CHECK(b.rho_1 < b.rho_c);
  CHECK(b.rho_2 < b.rho_c);
}

TEST_CASE("breakpoints reject unaffordable constant cost") {
  try {
    simul_breakpoints(classical(CostModel::constant(0.025)));
    FAIL("expected an infeasible error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
  }
}

TEST_CASE("simultaneous feasibility") {
  const ClassicalParams p = classical(CostModel::exponential(1e-3));
  CHECK(simul_feasible(p, {0.0, 0.0, 0.5, ""}));
  const double r1 = p.rate_free(1, 0.5);
  CHECK_FALSE(simul_feasible(p, {r1 + 1e-3, 0.0, 0.5, ""}));
  const SolveReport r = sumrate_simultaneous(p);
  CHECK(simul_feasible(p, {r.r1, r.r2, r.rho, ""}, 1e-9));
  CHECK(std::fabs(r.r1 + r.r2 - p.rate_sum(r.rho)) < 1e-9);
  CHECK(std::fabs(p.cost.eval(r.r1 + r.r2) - p.harvested(r.rho)) < 1e-9);
}

TEST_CASE("simultaneous boundary endpoints are single-user corners") {
  const ClassicalParams p = classical(CostModel::exponential(1e-3));
  const BoundaryCurve c = mdrb_simultaneous(p, {512, false});
  REQUIRE_FALSE(c.empty());
  CHECK(std::fabs(c.points.front().r2) < 1e-9);
  CHECK(std::fabs(c.points.back().r1) < 1e-9);
  const SimulBreakpoints b = simul_breakpoints(p);
  CHECK(std::fabs(c.points.back().r2 - p.rate_free(2, b.rho_1)) < 1e-9);
  CHECK(std::fabs(c.points.front().r1 - p.rate_free(1, b.rho_2)) < 1e-9);
  CHECK(std::fabs(c.max_sum() - sumrate_simultaneous(p).sum_rate) < 1e-9);
  for (const auto& pt : c.points) CHECK(simul_feasible(p, pt, 1e-9));
}

TEST_CASE("linear decoding cost gives the same region for both schemes") {
  const ClassicalParams p = classical(CostModel::linear(1e-3));
  CHECK(hausdorff(mdrb_simultaneous(p), mdrb_sic(p)) < 1e-6);
}

TEST_CASE("constant cost above the harvesting ceiling empties the region") {
  const BoundaryCurve c = mdrb_simultaneous(classical(CostModel::constant(0.025)));
  CHECK(c.empty());
  CHECK_FALSE(c.empty_reason.empty());
}

TEST_CASE("constant cost below the ceiling gives a pentagon") {
  const ClassicalParams p = classical(CostModel::constant(0.013));
  const BoundaryCurve c = mdrb_simultaneous(p);
  REQUIRE(c.points.size() == 3);
  CHECK(c.points[0].r2 == 0.0);
  for (int i : {1, 2}) {
    CHECK(c.points[i].r1 > 1e-9);
    CHECK(c.points[i].r2 > 1e-9);
  }
  CHECK(c.points[1].r1 == doctest::Approx(c.points[0].r1));
}

TEST_CASE("simultaneous sum rate") {
  const ClassicalParams p = classical(CostModel::exponential(1e-3));
  const SolveReport r = sumrate_simultaneous(p);
  CHECK(std::fabs(r.residual) < 1e-9);
  CHECK(std::fabs(simul_sumrate_residual(p, r.rho)) < 1e-9);
  CHECK(std::fabs(r.rho - simul_breakpoints(p).rho_c) < 1e-9);
  CHECK(r.sum_rate <= r.upper_bound + 1e-12);
  CHECK(r.binding == "rate=cost");
}

TEST_CASE("prohibitive decoding cost") {
  const SolveReport r = sumrate_simultaneous(classical(CostModel::exponential(1e3)));
  CHECK(r.rho > 1.0 - 1e-3);
  CHECK(r.sum_rate < 1e-3);
}

TEST_CASE("simultaneous sum rate matches the grid oracle") {
  for (const CostModel& cost : {CostModel::exponential(1e-3), CostModel::logarithmic(1e-3),
                                CostModel::linear(1e-3), CostModel::exponential(0.1)}) {
    const ClassicalParams p = classical(cost);
    const SolveReport r = sumrate_simultaneous(p);
    const OracleResult o = oracle_simul_sumrate(p, 1e-5);
    CHECK(std::fabs(r.sum_rate - o.sum_rate) < 1e-4);
    CHECK(o.sum_rate <= r.sum_rate + 1e-9);
  }
}

TEST_CASE("cost-rate convexity check") {
  const ClassicalParams lin = classical(CostModel::exponential(1e-3), EhModel::linear(1.0));
  CHECK_FALSE(cost_rate_convex(lin, 0.0, 1.0));
  const ClassicalParams logc = classical(CostModel::logarithmic(1e-3), EhModel::linear(1.0));
  CHECK(cost_rate_convex(logc, 0.0, 1.0));
}
