#pragma once

#include <string>
#include <vector>

namespace swipt {

struct Candidate {
  std::string label;
  double rho = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double value = 0.0;
};

/// Output of a sum-rate optimiser.
struct SolveReport {
  double rho = 0.0;
  double sum_rate = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double residual = 0.0;     // equality residual at the optimum (W)
  double upper_bound = 0.0;  // cost-only ceiling on the sum rate
  std::string binding;       // which constraint family is tight
  std::string order;         // decoding order, SIC only
  bool relabeled = false;    // users were swapped so that user 1 is stronger
  int grid_points = 0;
  std::vector<Candidate> candidates;
};

}  // namespace swipt
