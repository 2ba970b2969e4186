#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "swipt/classical_sic.hpp"
#include "swipt/region.hpp"

using namespace swipt;

namespace {

RatePoint pt(double r2, double r1) { return RatePoint{r1, r2, 0.0, ""}; }

BoundaryCurve raw(std::vector<RatePoint> pts) {
  BoundaryCurve c;
  c.points = std::move(pts);
  return c;
}

std::vector<RatePoint> random_cloud(std::mt19937_64& rng, int n) {
  std::vector<RatePoint> pts;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const double r2 = u(rng);
    pts.push_back(pt(r2, (1.0 - r2 * r2) * u(rng)));
  }
  return pts;
}

}  // namespace

TEST_CASE("upper_hull keeps collinear points") {
  const BoundaryCurve h = upper_hull({pt(0, 2), pt(1, 1), pt(2, 0)});
  CHECK(h.points.size() == 3);
  CHECK(h.hulled);
}

TEST_CASE("upper_hull drops a point below the chord") {
  const BoundaryCurve h = upper_hull({pt(0, 2), pt(1, 0.5), pt(2, 0)});
  REQUIRE(h.points.size() == 2);
  CHECK(h.points[0].r2 == 0.0);
  CHECK(h.points[0].r1 == 2.0);
  CHECK(h.points[1].r2 == 2.0);
  CHECK(h.points[1].r1 == 0.0);
}

TEST_CASE("upper_hull adds the r1-axis intercept") {
  const BoundaryCurve h = upper_hull({pt(0.5, 1.0), pt(0.8, 0.5)});
  REQUIRE(h.points.size() == 3);
  CHECK(h.points.front().r2 == 0.0);
  CHECK(h.points.front().r1 == 1.0);
  CHECK(h.points.back().r2 == 0.8);
  CHECK(interpolate_r1(h, 0.8 + 1e-12) == 0.0);
}

TEST_CASE("upper_hull invariants on random clouds") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto cloud = random_cloud(rng, 40);
    const BoundaryCurve h = upper_hull(cloud);
    CHECK(is_concave(h));
    for (size_t i = 1; i < h.points.size(); ++i) {
      CHECK(h.points[i].r2 > h.points[i - 1].r2);
      CHECK(h.points[i].r1 <= h.points[i - 1].r1);
    }
    for (const auto& p : cloud) CHECK(interpolate_r1(h, p.r2) >= p.r1 - 1e-12);
    const BoundaryCurve again = upper_hull(h.points);
    REQUIRE(again.points.size() == h.points.size());
    for (size_t i = 0; i < h.points.size(); ++i) {
      CHECK(again.points[i].r1 == h.points[i].r1);
      CHECK(again.points[i].r2 == h.points[i].r2);
    }
    CHECK(dominates(h, pareto_frontier(cloud), 1e-12));
  }
}

TEST_CASE("pareto_frontier removes dominated points") {
  const BoundaryCurve f = pareto_frontier({pt(0.2, 1.0), pt(0.1, 0.8), pt(0.5, 0.6), pt(0.5, 0.4)});
  REQUIRE(f.points.size() == 3);
  CHECK(f.points[0].r2 == 0.0);
  CHECK(f.points[1].r2 == 0.2);
  CHECK(f.points[2].r1 == 0.6);
  CHECK_FALSE(f.hulled);
}

TEST_CASE("SIC union hull bridges the two corner points with a straight segment") {
  const ClassicalParams p = swipt::testing::classical(CostModel::exponential(1e-3));
  auto pts = sic_order_points(p, DecodingOrder::kUser1First, 256);
  const auto other = sic_order_points(p, DecodingOrder::kUser2First, 256);
  pts.insert(pts.end(), other.begin(), other.end());
  const BoundaryCurve h = upper_hull(pts);
  const SicBreakpoints b1 = sic_breakpoints(p, DecodingOrder::kUser1First);
  const SicBreakpoints b2 = sic_breakpoints(p, DecodingOrder::kUser2First);
  const double lo = std::min(p.rate_free(2, b1.rho_c), p.rate_interfered(2, b2.rho_c));
  const double hi = std::max(p.rate_free(2, b1.rho_c), p.rate_interfered(2, b2.rho_c));
  std::vector<double> slopes;
  for (size_t i = 1; i < h.points.size(); ++i) {
    const auto& a = h.points[i - 1];
    const auto& b = h.points[i];
    if (a.r2 >= lo - 1e-9 && b.r2 <= hi + 1e-9) slopes.push_back((b.r1 - a.r1) / (b.r2 - a.r2));
  }
  REQUIRE(slopes.size() == 1);
  for (size_t i = 1; i < h.points.size(); ++i) CHECK(h.points[i].r2 > h.points[i - 1].r2);
  CHECK(slopes.front() == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("dominates") {
  const BoundaryCurve c = upper_hull({pt(0, 1.5), pt(0.6, 1.2), pt(1.1, 0.4), pt(1.3, 0)});
  CHECK(dominates(c, c, 0.0));
  std::vector<RatePoint> scaled;
  for (const auto& p : c.points) scaled.push_back(pt(0.9 * p.r2, 0.9 * p.r1));
  const BoundaryCurve s = raw(scaled);
  CHECK(dominates(c, s, 0.0));
  CHECK_FALSE(dominates(s, c, 1e-6));
  CHECK(dominance_margin(c, s) >= 0.0);
}

TEST_CASE("hausdorff") {
  const BoundaryCurve c = upper_hull({pt(0, 1.5), pt(0.6, 1.2), pt(1.1, 0.4), pt(1.3, 0)});
  CHECK(hausdorff(c, c) < 1e-15);
  const BoundaryCurve flat = raw({pt(0, 1), pt(1, 1)});
  const BoundaryCurve up = raw({pt(0, 1.25), pt(1, 1.25)});
  CHECK(hausdorff(flat, up) == doctest::Approx(0.25));
  CHECK(hausdorff(up, flat) == doctest::Approx(0.25));
}

TEST_CASE("mutual dominance bounds the Hausdorff distance") {
  const double tol = 1e-3;
  const BoundaryCurve a = upper_hull({pt(0, 1.0), pt(0.5, 0.8), pt(1.0, 0)});
  const BoundaryCurve b = upper_hull({pt(0, 1.0005), pt(0.5, 0.7995), pt(1.0, 0)});
  REQUIRE(dominates(a, b, tol));
  REQUIRE(dominates(b, a, tol));
  CHECK(hausdorff(a, b) <= 2 * tol);
}

TEST_CASE("best_weighted and summaries") {
  const BoundaryCurve c = upper_hull({pt(0, 1.5), pt(0.6, 1.2), pt(1.1, 0.4), pt(1.3, 0)});
  CHECK(c.max_r1() == 1.5);
  CHECK(c.max_r2() == 1.3);
  CHECK(c.max_sum() == doctest::Approx(1.8));
  CHECK(c.best_weighted(1, 0)->r1 == 1.5);
  CHECK(c.best_weighted(0, 1)->r2 == 1.3);
  CHECK(interpolate_r1(c, 0.3) == doctest::Approx(1.35));
  CHECK(interpolate_r1(c, 2.0) == 0.0);
}
