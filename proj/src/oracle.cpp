#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "parallel.hpp"
#include "swipt/classical_sic.hpp"

namespace swipt {

namespace {

int grid_size(double step) {
  if (!(step > 0.0 && step <= 1e-3)) throw Error(ErrorCode::kDomain, "rho_step must lie in (0, 1e-3]");
  return static_cast<int>(std::llround(1.0 / step)) + 1;
}

double grid_rho(int i, int n) { return i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1); }

void consider(OracleResult& best, double rho, double r1, double r2) {
  if (r1 + r2 > best.sum_rate) best = {rho, r1 + r2, r1, r2};
}

}  // namespace

OracleResult oracle_simul_sumrate(const ClassicalParams& params, double rho_step) {
  params.validate();
  const int n = grid_size(rho_step);
  OracleResult best;
  for (int i = 0; i < n; ++i) {
    const double rho = grid_rho(i, n);
    const double bound = params.rate_sum(rho);
    const double rate = params.cost.inverse(params.harvested(rho)).capped(bound);
    if (rate > best.sum_rate) {
      const double r2 = std::min(params.rate_free(2, rho), rate);
      best = {rho, rate, rate - r2, r2};
    }
  }
  return best;
}

OracleResult oracle_sic_sumrate(const ClassicalParams& params, double rho_step) {
  params.validate();
  const int n = grid_size(rho_step);
  OracleResult best;
  for (int i = 0; i < n; ++i) {
    const double rho = grid_rho(i, n);
    const double have = params.harvested(rho);
    for (auto order : {DecodingOrder::kUser1First, DecodingOrder::kUser2First}) {
      const double b1 = sic_bound(params, order, 1, rho);
      const double b2 = sic_bound(params, order, 2, rho);
      const double c1 = params.cost.eval(b1);
      const double c2 = params.cost.eval(b2);
      if (c1 <= have) consider(best, rho, b1, params.cost.inverse(have - c1).capped(b2));
      if (c2 <= have) consider(best, rho, params.cost.inverse(have - c2).capped(b1), b2);
    }
    const RateBound alone = params.cost.inverse(have);
    consider(best, rho, alone.capped(params.rate_free(1, rho)), 0.0);
    consider(best, rho, 0.0, alone.capped(params.rate_free(2, rho)));
  }
  return best;
}

CoopSolution oracle_coop_weighted(const CoopParams& params, double mu1, double mu2,
                                  const CoopGrid& grid) {
  params.validate();
  if (params.cost_user1.family() != CostModel::Family::kExp ||
      params.cost_user2.family() != CostModel::Family::kExp) {
    throw Error(ErrorCode::kDomain, "coop oracle needs exponential user decoding costs");
  }
  const int np = std::max(grid.pu_points, 2);
  const int nr = std::max(grid.rho_points, 2);
  const double b = params.b();
  const double c = params.c();
  const double k1 = params.cost_user1.beta() * c;  // P_U1 share per unit of P_21
  const double k2 = params.cost_user2.beta() * b;
  const double det = 1.0 - k1 * k2;
  if (std::fabs(det) < 1e-12) throw Error(ErrorCode::kSingular, "budget equalities are singular");

  struct Best {
    double value = -1.0;
    PowerAllocation alloc;
    double rho = 0.0, r1 = 0.0, r2 = 0.0;
  };
  std::vector<Best> rows(np);
  detail::parallel_for(np, [&](int i) {
    Best& best = rows[i];
    const double pu1 = params.p_u1_budget * i / (np - 1);
    for (int j = 0; j < np; ++j) {
      const double pu2 = params.p_u2_budget * j / (np - 1);
      const double e1 = params.p_u1_budget - pu1;
      const double e2 = params.p_u2_budget - pu2;
      PowerAllocation al{(e1 - k1 * e2) / det, (e2 - k2 * e1) / det, pu1, pu2};
      if (al.p12 < 0.0 || al.p21 < 0.0) continue;
      const double r1 = half_log2_1p(b * al.p12);
      const double r2 = half_log2_1p(c * al.p21);
      const double value = mu1 * r1 + mu2 * r2;
      if (value <= best.value) continue;
      // Harvested power grows with rho and the rate bound shrinks, so the
      // first feasible grid rho (if any) is the first one that pays for
      // decoding. Binary search over grid indices finds the same index as a
      // linear scan.
      auto paid = [&](int l) {
        return coop_constraints_eval(params, al, grid_rho(l, nr), r1, r2).dest_cost >= -1e-12;
      };
      if (!paid(nr - 1)) continue;
      int lo = -1, hi = nr - 1;
      while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (paid(mid) ? hi : lo) = mid;
      }
      const double rho = grid_rho(hi, nr);
      if (coop_constraints_eval(params, al, rho, r1, r2).feasible(1e-12)) {
        best = {value, al, rho, r1, r2};
      }
    }
  });
  Best best;
  for (const auto& r : rows) {
    if (r.value > best.value) best = r;
  }
  CoopSolution sol;
  if (best.value < 0.0) {
    sol.note = "no feasible grid point";
    return sol;
  }
  sol.alloc = best.alloc;
  sol.rho = best.rho;
  sol.r1 = best.r1;
  sol.r2 = best.r2;
  sol.weighted_rate = best.value;
  sol.cooperation_valid = true;
  sol.constraint36_satisfied = true;
  const CoopSlacks s = coop_constraints_eval(params, sol.alloc, sol.rho, sol.r1, sol.r2);
  sol.residuals = {-s.budget1, -s.budget2, -s.dest_cost, s.sum_rate};
  return sol;
}

}  // namespace swipt
