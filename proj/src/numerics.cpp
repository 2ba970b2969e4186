#include "swipt/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>

namespace swipt {

namespace {

double checked(const ScalarFn& f, double x) {
  const double v = f(x);
  if (std::isnan(v)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "function returned NaN at x = %.17g", x);
    throw Error(ErrorCode::kEvaluation, buf);
  }
  return v;
}

}  // namespace

double bisect_root(const ScalarFn& f, double lo, double hi, const RootConfig& cfg) {
  if (!(lo <= hi)) throw Error(ErrorCode::kDomain, "bisect_root: lo must not exceed hi");
  double flo = checked(f, lo);
  const double fhi = checked(f, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "no sign change on [%.17g, %.17g] (f = %.6g, %.6g)", lo, hi,
                  flo, fhi);
    throw Error(ErrorCode::kBracket, buf);
  }
  for (int i = 0; i < cfg.max_iter && hi - lo > cfg.abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = checked(f, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                        const RootConfig& cfg) {
  const bool at_lo = pred(lo);
  if (pred(hi) == at_lo) throw Error(ErrorCode::kBracket, "predicate does not change on interval");
  for (int i = 0; i < cfg.max_iter && hi - lo > cfg.abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at_lo ? lo : hi;
}

ScanResult maximize_scan(const ScalarFn& f, double lo, double hi, const ScanConfig& cfg) {
  if (!(lo < hi)) throw Error(ErrorCode::kDomain, "maximize_scan: need lo < hi");
  const int n = std::max(cfg.grid_points, 3);
  const double step = (hi - lo) / (n - 1);
  int best = -1;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? hi : lo + step * i;
    const double v = f(x);
    if (std::isnan(v)) continue;
    if (best < 0 || v > best_val) {
      best = i;
      best_val = v;
    }
  }
  if (best < 0) throw Error(ErrorCode::kEvaluation, "maximize_scan: every sample was NaN");
  ScanResult out{best == n - 1 ? hi : lo + step * best, best_val};

  double a = lo + step * std::max(best - 1, 0);
  double b = best + 1 >= n - 1 ? hi : lo + step * (best + 1);
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  auto value = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  double fc = value(c);
  double fd = value(d);
  for (int i = 0; i < cfg.refine_iters && b - a > 1e-15 * (1.0 + std::fabs(a)); ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = value(d);
    }
  }
  const double x = fc >= fd ? c : d;
  const double fx = std::max(fc, fd);
  if (fx > out.max) out = {x, fx};
  return out;
}

std::vector<double> critical_points(const ScalarFn& f, double lo, double hi,
                                    const ScanConfig& cfg, const ScalarFn& df) {
  std::vector<double> out;
  if (!(lo < hi)) return out;
  const int n = std::max(cfg.grid_points, 3);
  const double h = (hi - lo) / n;
  // Keep the stencil inside [lo, hi].
  auto deriv = [&](double x) {
    if (df) return df(x);
    const double xl = std::max(lo, x - h);
    const double xr = std::min(hi, x + h);
    return (f(xr) - f(xl)) / (xr - xl);
  };
  const double step = (hi - lo) / (n - 1);
  double x_prev = lo + step;
  double d_prev = deriv(x_prev);
  for (int i = 2; i < n - 1; ++i) {
    const double x = lo + step * i;
    const double d = deriv(x);
    if (std::isfinite(d_prev) && std::isfinite(d) && ((d_prev > 0.0 && d <= 0.0) || (d_prev < 0.0 && d >= 0.0))) {
      RootConfig rc;
      rc.abs_tol = std::max(1e-14, 1e-12 * (hi - lo));
      double root;
      if (d == 0.0) {
        root = x;
      } else {
        try {
          root = bisect_root(deriv, x_prev, x, rc);
        } catch (const Error&) {
          root = 0.5 * (x_prev + x);
        }
      }
      if (out.empty() || root - out.back() > 0.5 * step) out.push_back(root);
    }
    x_prev = x;
    d_prev = d;
  }
  return out;
}

std::pair<double, double> solve_2x2(double m11, double m12, double m21, double m22, double rhs1,
                                    double rhs2) {
  const double det = m11 * m22 - m12 * m21;
  const double norm_sq = m11 * m11 + m12 * m12 + m21 * m21 + m22 * m22;
  if (!(std::fabs(det) > 1e-14 * norm_sq)) {
    throw Error(ErrorCode::kSingular, "2x2 system is singular");
  }
  return {(rhs1 * m22 - m12 * rhs2) / det, (m11 * rhs2 - m21 * rhs1) / det};
}

}  // namespace swipt
