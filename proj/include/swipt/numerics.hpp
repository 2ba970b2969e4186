#pragma once

// Scalar numerical helpers: bracketed bisection, scan-then-golden-section
// maximisation, derivative sign-change scanning and a 2x2 Cramer solver.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "swipt/error.hpp"

namespace swipt {

struct RootConfig {
  double abs_tol = 1e-12;
  int max_iter = 200;
};

struct ScanConfig {
  int grid_points = 20001;
  int refine_iters = 100;
};

using ScalarFn = std::function<double(double)>;

/// Bisection on [lo, hi]; requires f(lo) * f(hi) <= 0.
double bisect_root(const ScalarFn& f, double lo, double hi, const RootConfig& cfg = {});

/// Like bisect_root but for a monotone predicate: returns the boundary between
/// `pred == lo_value` and the opposite value.
double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                        const RootConfig& cfg = {});

struct ScanResult {
  double argmax = 0.0;
  double max = 0.0;
};

/// Grid scan followed by golden-section refinement around the best cell.
ScanResult maximize_scan(const ScalarFn& f, double lo, double hi, const ScanConfig& cfg = {});

/// Interior sign changes of f' on [lo, hi], refined by bisection. When `df` is
/// empty a central difference with step (hi - lo) / grid_points is used.
std::vector<double> critical_points(const ScalarFn& f, double lo, double hi,
                                    const ScanConfig& cfg = {}, const ScalarFn& df = {});

/// Cramer solve of [[m11, m12], [m21, m22]] x = rhs.
std::pair<double, double> solve_2x2(double m11, double m12, double m21, double m22, double rhs1,
                                    double rhs2);

/// Central-difference derivative.
inline double central_diff(const ScalarFn& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace swipt
