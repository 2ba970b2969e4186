#include "swipt/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swipt {

namespace {

constexpr double kSnap = 1e-13;
constexpr double kMerge = 1e-9;  // r2 gap (relative above 1 bit) below which two samples are one point

// Round-off around zero becomes exactly zero.
double clamp_rate(double r) { return std::fabs(r) < kSnap ? 0.0 : r; }

std::vector<RatePoint> sanitize(std::vector<RatePoint> pts) {
  std::vector<RatePoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    p.r1 = clamp_rate(p.r1);
    p.r2 = clamp_rate(p.r2);
    if (std::isfinite(p.r1) && std::isfinite(p.r2) && p.r1 >= 0.0 && p.r2 >= 0.0) {
      out.push_back(std::move(p));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const RatePoint& x, const RatePoint& y) {
    if (x.r2 != y.r2) return x.r2 < y.r2;
    return x.r1 > y.r1;
  });
  // One point per r2 (up to rounding), the highest.
  std::vector<RatePoint> dedup;
  for (auto& p : out) {
    if (!dedup.empty() && p.r2 - dedup.back().r2 <= kMerge * std::max(1.0, p.r2)) {
      if (p.r1 > dedup.back().r1) dedup.back() = std::move(p);
      continue;
    }
    dedup.push_back(std::move(p));
  }
  return dedup;
}

// > 0 when b lies strictly above the chord from a to c.
double above_chord(const RatePoint& a, const RatePoint& b, const RatePoint& c) {
  return (b.r1 - a.r1) * (c.r2 - a.r2) - (c.r1 - a.r1) * (b.r2 - a.r2);
}

double point_segment(double px, double py, double ax, double ay, double bx, double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

double point_polyline(double px, double py, const BoundaryCurve& c) {
  const auto& p = c.points;
  if (p.size() == 1) return std::hypot(px - p[0].r2, py - p[0].r1);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    best = std::min(best, point_segment(px, py, p[i].r2, p[i].r1, p[i + 1].r2, p[i + 1].r1));
  }
  return best;
}

double directed(const BoundaryCurve& from, const BoundaryCurve& to, int samples) {
  const auto& p = from.points;
  double worst = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    worst = std::max(worst, point_polyline(p[i].r2, p[i].r1, to));
    if (i + 1 == p.size()) break;
    for (int k = 1; k < samples; ++k) {
      const double t = static_cast<double>(k) / samples;
      const double x = p[i].r2 + t * (p[i + 1].r2 - p[i].r2);
      const double y = p[i].r1 + t * (p[i + 1].r1 - p[i].r1);
      worst = std::max(worst, point_polyline(x, y, to));
    }
  }
  return worst;
}

}  // namespace

double BoundaryCurve::max_r1() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.r1);
  return m;
}

double BoundaryCurve::max_r2() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.r2);
  return m;
}

double BoundaryCurve::max_sum() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.r1 + p.r2);
  return m;
}

bool is_concave(const BoundaryCurve& curve, double tol) {
  const auto& p = curve.points;
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    if (above_chord(p[i - 1], p[i], p[i + 1]) < -tol * (p[i + 1].r2 - p[i - 1].r2)) return false;
  }
  return true;
}

const RatePoint* BoundaryCurve::best_weighted(double mu1, double mu2) const {
  const RatePoint* best = nullptr;
  double v = -1.0;
  for (const auto& p : points) {
    const double w = mu1 * p.r1 + mu2 * p.r2;
    if (w > v) {
      v = w;
      best = &p;
    }
  }
  return best;
}

BoundaryCurve pareto_frontier(std::vector<RatePoint> points) {
  auto pts = sanitize(std::move(points));
  BoundaryCurve out;
  // Walk from the largest r2 down, keeping points whose r1 beats everything to the right.
  double best_r1 = -1.0;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    if (it->r1 > best_r1) {
      best_r1 = it->r1;
      out.points.push_back(*it);
    }
  }
  std::reverse(out.points.begin(), out.points.end());
  if (out.points.empty()) return out;
  if (out.points.front().r2 > 0.0) {
    RatePoint left = out.points.front();
    left.r2 = 0.0;
    out.points.insert(out.points.begin(), left);
  }
  return out;
}

BoundaryCurve upper_hull(std::vector<RatePoint> points) {
  auto pts = sanitize(std::move(points));
  BoundaryCurve out;
  out.hulled = true;
  if (pts.empty()) return out;

  auto top = std::max_element(pts.begin(), pts.end(),
                              [](const RatePoint& x, const RatePoint& y) { return x.r1 < y.r1; });
  RatePoint left = *top;
  left.r2 = 0.0;
  pts.push_back(left);
  pts = sanitize(std::move(pts));

  std::vector<RatePoint> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double scale = std::max({a.r1, b.r1, p.r1, 1.0}) * (p.r2 - a.r2);
      if (above_chord(a, b, p) >= -1e-14 * scale) break;
      hull.pop_back();
    }
    hull.push_back(std::move(p));
  }
  out.points = std::move(hull);
  return out;
}

double interpolate_r1(const BoundaryCurve& curve, double r2) {
  const auto& p = curve.points;
  if (p.empty()) return 0.0;
  if (r2 <= p.front().r2) return p.front().r1;
  if (r2 > p.back().r2) return 0.0;
  auto it = std::lower_bound(p.begin(), p.end(), r2,
                             [](const RatePoint& q, double x) { return q.r2 < x; });
  if (it->r2 == r2) return it->r1;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (r2 - lo.r2) / (hi.r2 - lo.r2);
  return lo.r1 + t * (hi.r1 - lo.r1);
}

namespace {

// min over the union grid of r1_a - r1_b; past a's last vertex a contributes
// its last r1 when `extend` is set and 0 otherwise.
double margin_on_union(const BoundaryCurve& a, const BoundaryCurve& b, bool extend) {
  const double a_max = a.points.back().r2;
  const double b_max = b.points.back().r2;
  std::vector<double> grid;
  for (const auto& q : a.points) grid.push_back(q.r2);
  for (const auto& q : b.points) grid.push_back(q.r2);
  std::sort(grid.begin(), grid.end());
  double margin = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    if (x > b_max) break;
    double ra = interpolate_r1(a, x);
    if (x > a_max && extend) ra = a.points.back().r1;
    margin = std::min(margin, ra - interpolate_r1(b, x));
  }
  return margin;
}

}  // namespace

double dominance_margin(const BoundaryCurve& a, const BoundaryCurve& b) {
  if (b.empty()) return std::numeric_limits<double>::infinity();
  if (a.empty()) return -std::numeric_limits<double>::infinity();
  return margin_on_union(a, b, false);
}

bool dominates(const BoundaryCurve& a, const BoundaryCurve& b, double tol) {
  if (b.empty()) return true;
  if (a.empty()) return false;
  if (a.points.back().r2 < b.points.back().r2 - tol) return false;
  return margin_on_union(a, b, true) >= -tol;
}

double hausdorff(const BoundaryCurve& a, const BoundaryCurve& b, int samples_per_segment) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b, samples_per_segment), directed(b, a, samples_per_segment));
}

}  // namespace swipt
