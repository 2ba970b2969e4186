#pragma once

#include <cmath>
#include <random>

#include "swipt/models.hpp"

namespace swipt::testing {

inline EhModel logistic_eh() { return EhModel::logistic(1500.0, 0.0022, 0.024); }

// Evaluation setup: d = 3 m, alpha = 2, P = 0.5 W, N = 1e-6 W, N_p = 1e-3 W.
inline ClassicalParams classical(CostModel cost, EhModel eh = logistic_eh()) {
  ClassicalParams p;
  p.h1_sq = p.h2_sq = std::pow(3.0, -4.0);
  p.p1 = p.p2 = 0.5;
  p.n = 1e-6;
  p.n_p = 1e-3;
  p.eh = eh;
  p.cost = cost;
  return p;
}

inline CoopParams coop(double beta, double h_u, EhModel eh = logistic_eh()) {
  CoopParams c;
  c.h1 = c.h2 = 1.0 / 9.0;
  c.h12 = c.h21 = h_u;
  c.n1 = c.n2 = c.n = 1e-6;
  c.n_p = 1e-3;
  c.p_u1_budget = c.p_u2_budget = 0.5;
  c.eh = eh;
  c.cost_dest = c.cost_user1 = c.cost_user2 = CostModel::exponential(beta);
  return c;
}

inline double log_uniform(std::mt19937_64& rng, double lo_exp, double hi_exp) {
  return std::pow(10.0, std::uniform_real_distribution<double>(lo_exp, hi_exp)(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Linear EH, exponential cost, decoder noise neglected: the regime of the SIC
// closed form. A >= B so user 1 is the stronger one.
inline ClassicalParams random_closed_form_draw(std::mt19937_64& rng) {
  ClassicalParams p;
  double a = log_uniform(rng, -3.5, -2.0);
  double b = log_uniform(rng, -3.5, -2.0);
  if (a < b) std::swap(a, b);
  p.h1_sq = a;
  p.h2_sq = b;
  p.p1 = p.p2 = 1.0;
  p.n = 1e-6;
  p.n_p = log_uniform(rng, -3.3, -2.7);
  p.eh = EhModel::linear(uniform(rng, 0.5, 1.0));
  p.cost = CostModel::exponential(log_uniform(rng, -3.5, -2.5));
  p.neglect_decoder_noise = true;
  return p;
}

// Linear EH with a common exponential cost at all three nodes, drawn around
// the evaluation setup: d in [2, 4] m, h_u in [0.002, 0.016], beta in
// [-30, -21] dBW.
inline CoopParams random_coop_draw(std::mt19937_64& rng) {
  CoopParams c;
  c.h1 = std::pow(uniform(rng, 2.0, 4.0), -2.0);
  c.h2 = std::pow(uniform(rng, 2.0, 4.0), -2.0);
  c.h12 = log_uniform(rng, std::log10(0.002), std::log10(0.016));
  c.h21 = log_uniform(rng, std::log10(0.002), std::log10(0.016));
  c.n1 = c.n2 = c.n = 1e-6;
  c.n_p = 1e-3;
  c.p_u1_budget = uniform(rng, 0.3, 0.7);
  c.p_u2_budget = uniform(rng, 0.3, 0.7);
  c.eh = EhModel::linear(uniform(rng, 0.5, 1.0));
  const double beta = log_uniform(rng, -3.0, -2.1);
  c.cost_dest = c.cost_user1 = c.cost_user2 = CostModel::exponential(beta);
  return c;
}

}  // namespace swipt::testing
