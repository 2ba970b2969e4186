#pragma once

// Rate-region frontiers in the (r2, r1) plane: construction, time-sharing
// hull, dominance and distance.

#include <string>
#include <vector>

namespace swipt {

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
  double rho = 0.0;
  std::string tag;  // decoding order, weight pair or segment label
};

struct BoundaryCurve {
  std::vector<RatePoint> points;  // increasing r2, non-increasing r1
  bool hulled = false;
  std::string empty_reason;

  bool empty() const { return points.empty(); }
  double max_r1() const;
  double max_r2() const;
  double max_sum() const;
  /// Largest mu1 r1 + mu2 r2 over the vertices.
  const RatePoint* best_weighted(double mu1, double mu2) const;
};

/// Sorts by r2, keeps the largest r1 per r2, drops dominated points and adds
/// the r1-axis intercept. Past the last vertex the frontier drops straight
/// to the r2 axis.
BoundaryCurve pareto_frontier(std::vector<RatePoint> points);

/// True when no vertex lies below the chord of its neighbours (beyond tol).
bool is_concave(const BoundaryCurve& curve, double tol = 1e-12);

/// Upper concave envelope including the r1-axis intercept (0, max r1); the
/// drop to (max r2, 0) is implicit as for pareto_frontier.
BoundaryCurve upper_hull(std::vector<RatePoint> points);

/// Linear interpolation of r1 at r2 along the frontier. Beyond the last
/// vertex the value is 0; before the first it is the first r1.
double interpolate_r1(const BoundaryCurve& curve, double r2);

/// min over the union r2 grid (restricted to b's support) of r1_a - r1_b.
double dominance_margin(const BoundaryCurve& a, const BoundaryCurve& b);

bool dominates(const BoundaryCurve& a, const BoundaryCurve& b, double tol);

/// Symmetric Hausdorff distance between the polylines.
double hausdorff(const BoundaryCurve& a, const BoundaryCurve& b, int samples_per_segment = 16);

}  // namespace swipt
