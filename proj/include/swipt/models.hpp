#pragma once

// Energy-harvesting conversion, decoding-cost families and the parameter
// records shared by every solver. Powers are in watts, rates in bits per
// channel use (1/2 log2 convention).

#include <cmath>
#include <limits>
#include <string>

namespace swipt {

/// 1/2 log2(1 + x).
inline double half_log2_1p(double x) { return 0.5 * std::log1p(x) / std::log(2.0); }

/// Inverse of half_log2_1p: 2^(2r) - 1.
inline double snr_for_rate(double r) { return std::expm1(2.0 * r * std::log(2.0)); }

/// Rectifier model psi: RF input power -> harvested DC power.
///
/// The logistic variant is the zero-crossing normalisation of a logistic curve
/// fitted to rectifier measurements; the linear variant models an array of
/// rectifiers operated far from saturation.
class EhModel {
 public:
  enum class Kind { kLogistic, kLinear };

  static EhModel logistic(double q1, double q2, double p_max_dc);
  static EhModel linear(double eta);

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::kLinear; }
  double q1() const { return q1_; }
  double q2() const { return q2_; }
  double p_max_dc() const { return p_max_dc_; }
  double eta() const { return eta_; }
  double theta() const { return theta_; }

  /// psi(p_in). Throws kDomain for negative input.
  double eval(double p_in) const;

  /// Unique p_in >= 0 with eval(p_in) == p_dc.
  double inverse(double p_dc) const;

  /// Supremum of psi over [0, inf): p_max_dc for logistic, +inf for linear eta>0.
  double ceiling() const;

  std::string describe() const;

 private:
  EhModel() = default;

  Kind kind_ = Kind::kLinear;
  double q1_ = 0.0;
  double q2_ = 0.0;
  double p_max_dc_ = 0.0;
  double eta_ = 1.0;
  double theta_ = 0.0;
  double exp_q1q2_log_ = 0.0;  // q1*q2, kept in log form
};

/// Result of a generalized cost inverse. `unbounded` means no finite rate is
/// limited by the given power; callers cap it with the mutual-information bounds.
struct RateBound {
  double value = 0.0;
  bool unbounded = false;

  double capped(double cap) const { return unbounded ? cap : std::fmin(value, cap); }
};

/// Decoding-cost function phi: rate -> decoding power.
class CostModel {
 public:
  enum class Family { kExp, kLog, kLin, kConst };

  static CostModel exponential(double beta);  // beta (2^{2R} - 1)
  static CostModel logarithmic(double beta);  // beta log2(2R + 1)
  static CostModel linear(double beta);       // 2 beta R
  static CostModel constant(double phi0);     // phi0 * 1{R > 0}

  Family family() const { return family_; }
  double beta() const { return beta_; }
  double phi0() const { return phi0_; }

  double eval(double rate) const;

  /// sup{R >= 0 : eval(R) <= power}.
  RateBound inverse(double power) const;

  std::string describe() const;

 private:
  CostModel() = default;

  Family family_ = Family::kExp;
  double beta_ = 0.0;
  double phi0_ = 0.0;
};

enum class DecodingOrder { kUser1First, kUser2First };

const char* to_string(DecodingOrder order);

/// Two-user PS-SWIPT MAC without cooperation.
///
/// `neglect_decoder_noise` drops the (1 - rho) N term from every
/// information-rate denominator (the N << N_p regime) while N still enters
/// the harvested power through a().
struct ClassicalParams {
  double h1_sq = 0.0;
  double h2_sq = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double n = 0.0;
  double n_p = 0.0;
  EhModel eh = EhModel::linear(1.0);
  CostModel cost = CostModel::exponential(1e-3);
  bool neglect_decoder_noise = false;

  void validate() const;

  double signal1() const { return h1_sq * p1; }
  double signal2() const { return h2_sq * p2; }
  /// Total received RF power |h1|^2 P1 + |h2|^2 P2 + N.
  double a() const { return signal1() + signal2() + n; }
  /// Antenna noise as seen by the decoder.
  double decoder_noise() const { return neglect_decoder_noise ? 0.0 : n; }
  /// Interference-plus-noise for user 1 when user 2 is still undecoded.
  double n_u() const { return signal2() + decoder_noise(); }

  double harvested(double rho) const { return eh.eval(rho * a()); }

  /// Rate bound of user k (1 or 2) with the other user cancelled.
  double rate_free(int user, double rho) const;
  /// Rate bound of user k treating the other user as noise.
  double rate_interfered(int user, double rho) const;
  /// Sum-rate bound with both users decoded jointly.
  double rate_sum(double rho) const;

  /// Same channel with user labels exchanged.
  ClassicalParams swapped() const;
};

struct PowerAllocation {
  double p12 = 0.0;  // fresh message of user 1, decoded at user 2
  double p21 = 0.0;  // fresh message of user 2, decoded at user 1
  double pu1 = 0.0;  // user 1 share of the common message
  double pu2 = 0.0;  // user 2 share of the common message

  double p1() const { return p12 + pu1; }
  double p2() const { return p21 + pu2; }
};

/// Two-user PS-SWIPT MAC with user cooperation. Gains are real amplitudes.
struct CoopParams {
  double h1 = 0.0;
  double h2 = 0.0;
  double h12 = 0.0;
  double h21 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n = 0.0;
  double n_p = 0.0;
  double p_u1_budget = 0.0;
  double p_u2_budget = 0.0;
  EhModel eh = EhModel::linear(1.0);
  CostModel cost_dest = CostModel::exponential(1e-3);
  CostModel cost_user1 = CostModel::exponential(1e-3);
  CostModel cost_user2 = CostModel::exponential(1e-3);
  bool neglect_decoder_noise = false;

  void validate() const;

  /// |h12|^2 / N2.
  double b() const { return h12 * h12 / n2; }
  /// |h21|^2 / N1.
  double c() const { return h21 * h21 / n1; }
  double decoder_noise() const { return neglect_decoder_noise ? 0.0 : n; }

  /// Received RF signal power S including the coherent common-message term.
  double received_power(const PowerAllocation& alloc) const;

  /// The non-cooperative channel with the same destination links and budgets.
  ClassicalParams classical() const;
};

}  // namespace swipt
