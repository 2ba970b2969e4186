#include "swipt/models.hpp"

#include <cstdio>
#include <utility>

#include "swipt/error.hpp"

namespace swipt {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kDomain, what);
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kSaturation: return "rectifier saturation";
    case ErrorCode::kNoInverse: return "no inverse";
    case ErrorCode::kBracket: return "bracket error";
    case ErrorCode::kEvaluation: return "evaluation error";
    case ErrorCode::kSingular: return "singular system";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

const char* to_string(DecodingOrder order) {
  return order == DecodingOrder::kUser1First ? "user1-first" : "user2-first";
}

// ---------------------------------------------------------------- EhModel

EhModel EhModel::logistic(double q1, double q2, double p_max_dc) {
  require(q1 > 0.0 && std::isfinite(q1), "logistic EH: q1 must be positive");
  require(q2 >= 0.0 && std::isfinite(q2), "logistic EH: q2 must be non-negative");
  require(p_max_dc > 0.0 && std::isfinite(p_max_dc), "logistic EH: p_max_dc must be positive");
  EhModel m;
  m.kind_ = Kind::kLogistic;
  m.q1_ = q1;
  m.q2_ = q2;
  m.p_max_dc_ = p_max_dc;
  m.exp_q1q2_log_ = q1 * q2;
  // 1 / (1 + e^{q1 q2}) without forming e^{q1 q2}.
  m.theta_ = sigmoid(-m.exp_q1q2_log_);
  return m;
}

EhModel EhModel::linear(double eta) {
  require(eta >= 0.0 && eta <= 1.0, "linear EH: eta must lie in [0, 1]");
  EhModel m;
  m.kind_ = Kind::kLinear;
  m.eta_ = eta;
  return m;
}

double EhModel::eval(double p_in) const {
  if (!(p_in >= 0.0)) throw Error(ErrorCode::kDomain, fmt("EH input power must be >= 0 (got %g)", p_in));
  if (kind_ == Kind::kLinear) return eta_ * p_in;
  // (Psi(p) - Pmax theta) / (1 - theta) rewritten as
  // Pmax * sigma(q1 (p - q2)) * (1 - e^{-q1 p}); exact zero at p = 0.
  return p_max_dc_ * sigmoid(q1_ * (p_in - q2_)) * -std::expm1(-q1_ * p_in);
}

double EhModel::inverse(double p_dc) const {
  if (!(p_dc >= 0.0)) throw Error(ErrorCode::kDomain, fmt("EH output power must be >= 0 (got %g)", p_dc));
  if (p_dc == 0.0) return 0.0;
  if (kind_ == Kind::kLinear) {
    if (eta_ == 0.0) throw Error(ErrorCode::kNoInverse, "linear EH with eta = 0 has no inverse");
    return p_dc / eta_;
  }
  if (p_dc >= p_max_dc_) {
    throw Error(ErrorCode::kSaturation,
                fmt("requested %g W but the rectifier saturates at %g W", p_dc, p_max_dc_));
  }
  const double t = p_dc / p_max_dc_;
  double log_num;  // log(1 + e^{q1 q2} t)
  if (exp_q1q2_log_ < 700.0) {
    log_num = std::log1p(std::exp(exp_q1q2_log_) * t);
  } else {
    log_num = exp_q1q2_log_ + std::log(t + std::exp(-exp_q1q2_log_));
  }
  return (log_num - std::log1p(-t)) / q1_;
}

double EhModel::ceiling() const {
  if (kind_ == Kind::kLogistic) return p_max_dc_;
  return eta_ > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

std::string EhModel::describe() const {
  if (kind_ == Kind::kLinear) return fmt("linear(eta=%g)", eta_);
  return fmt("logistic(q1=%g, q2=%g, p_max_dc=%g)", q1_, q2_, p_max_dc_);
}

// -------------------------------------------------------------- CostModel

CostModel CostModel::exponential(double beta) {
  require(beta > 0.0 && std::isfinite(beta), "exp cost: beta must be positive");
  CostModel m;
  m.family_ = Family::kExp;
  m.beta_ = beta;
  return m;
}

CostModel CostModel::logarithmic(double beta) {
  require(beta > 0.0 && std::isfinite(beta), "log cost: beta must be positive");
  CostModel m;
  m.family_ = Family::kLog;
  m.beta_ = beta;
  return m;
}

CostModel CostModel::linear(double beta) {
  require(beta > 0.0 && std::isfinite(beta), "lin cost: beta must be positive");
  CostModel m;
  m.family_ = Family::kLin;
  m.beta_ = beta;
  return m;
}

CostModel CostModel::constant(double phi0) {
  require(phi0 >= 0.0 && std::isfinite(phi0), "const cost: phi0 must be non-negative");
  CostModel m;
  m.family_ = Family::kConst;
  m.phi0_ = phi0;
  return m;
}

double CostModel::eval(double rate) const {
  if (!(rate >= 0.0)) throw Error(ErrorCode::kDomain, fmt("rate must be >= 0 (got %g)", rate));
  switch (family_) {
    case Family::kExp: return beta_ * std::expm1(2.0 * rate * kLn2);
    case Family::kLog: return beta_ * std::log1p(2.0 * rate) / kLn2;
    case Family::kLin: return 2.0 * beta_ * rate;
    case Family::kConst: return rate > 0.0 ? phi0_ : 0.0;
  }
  return 0.0;
}

RateBound CostModel::inverse(double power) const {
  if (!(power >= 0.0)) throw Error(ErrorCode::kDomain, fmt("power must be >= 0 (got %g)", power));
  switch (family_) {
    case Family::kExp: return {0.5 * std::log1p(power / beta_) / kLn2, false};
    case Family::kLog: {
      const double x = power * kLn2 / beta_;
      if (x > 700.0) return {0.0, true};
      return {0.5 * std::expm1(x), false};
    }
    case Family::kLin: return {power / (2.0 * beta_), false};
    case Family::kConst:
      if (power < phi0_) return {0.0, false};
      return {0.0, true};
  }
  return {0.0, false};
}

std::string CostModel::describe() const {
  switch (family_) {
    case Family::kExp: return fmt("exp(beta=%g)", beta_);
    case Family::kLog: return fmt("log(beta=%g)", beta_);
    case Family::kLin: return fmt("lin(beta=%g)", beta_);
    case Family::kConst: return fmt("const(phi0=%g)", phi0_);
  }
  return "?";
}

// -------------------------------------------------------- ClassicalParams

void ClassicalParams::validate() const {
  require(h1_sq > 0.0 && h2_sq > 0.0, "channel power gains must be positive");
  require(p1 >= 0.0 && p2 >= 0.0, "transmit powers must be non-negative");
  require(n >= 0.0, "antenna noise N must be non-negative");
  require(n_p > 0.0, "processing noise N_p must be positive");
  require(a() > n, "at least one user must transmit");
  require(std::isfinite(a()), "parameters must be finite");
}

double ClassicalParams::rate_free(int user, double rho) const {
  const double s = user == 1 ? signal1() : signal2();
  const double x = 1.0 - rho;
  return half_log2_1p(x * s / (x * decoder_noise() + n_p));
}

double ClassicalParams::rate_interfered(int user, double rho) const {
  const double s = user == 1 ? signal1() : signal2();
  const double other = user == 1 ? signal2() : signal1();
  const double x = 1.0 - rho;
  return half_log2_1p(x * s / (x * (other + decoder_noise()) + n_p));
}

double ClassicalParams::rate_sum(double rho) const {
  const double x = 1.0 - rho;
  return half_log2_1p(x * (signal1() + signal2()) / (x * decoder_noise() + n_p));
}

ClassicalParams ClassicalParams::swapped() const {
  ClassicalParams s = *this;
  std::swap(s.h1_sq, s.h2_sq);
  std::swap(s.p1, s.p2);
  return s;
}

// ------------------------------------------------------------ CoopParams

void CoopParams::validate() const {
  require(h1 >= 0.0 && h2 >= 0.0, "destination amplitude gains must be non-negative");
  require(h12 > 0.0 && h21 > 0.0, "user-user gains must be positive");
  require(n1 > 0.0 && n2 > 0.0, "user noise powers must be positive");
  require(n >= 0.0, "antenna noise N must be non-negative");
  require(n_p > 0.0, "processing noise N_p must be positive");
  require(p_u1_budget >= 0.0 && p_u2_budget >= 0.0, "user budgets must be non-negative");
}

double CoopParams::received_power(const PowerAllocation& alloc) const {
  return h1 * h1 * alloc.p1() + h2 * h2 * alloc.p2() +
         2.0 * h1 * h2 * std::sqrt(std::fmax(alloc.pu1, 0.0) * std::fmax(alloc.pu2, 0.0));
}

ClassicalParams CoopParams::classical() const {
  ClassicalParams p;
  p.h1_sq = h1 * h1;
  p.h2_sq = h2 * h2;
  p.p1 = p_u1_budget;
  p.p2 = p_u2_budget;
  p.n = n;
  p.n_p = n_p;
  p.eh = eh;
  p.cost = cost_dest;
  p.neglect_decoder_noise = neglect_decoder_noise;
  return p;
}

}  // namespace swipt
