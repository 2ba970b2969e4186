#include "swipt_mac.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "swipt/classical_sic.hpp"
#include "swipt/classical_simul.hpp"
#include "swipt/commands.hpp"
#include "swipt/run_config.hpp"

struct swipt_config {
  swipt::RunConfig cfg;
};

struct swipt_eh {
  swipt::EhModel model;
};

struct swipt_cost {
  swipt::CostModel model;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SWIPT_OK;
  } catch (const swipt::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SWIPT_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SWIPT_E_INTERNAL;
  }
}

int bad_argument(const char* what) {
  g_last_error = what;
  return SWIPT_E_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* swipt_version(void) { return "1.0.0"; }

const char* swipt_status_string(int status) {
  if (status == SWIPT_OK) return "ok";
  if (status == SWIPT_E_ARGUMENT) return "invalid argument";
  if (status >= SWIPT_E_DOMAIN && status <= SWIPT_E_INTERNAL) {
    return swipt::to_string(static_cast<swipt::ErrorCode>(status));
  }
  return "unknown status";
}

const char* swipt_last_error(void) { return g_last_error.c_str(); }

int swipt_config_load(const char* path, const char* preset, swipt_config** out) {
  if (!path || !out) return bad_argument("path and out must not be null");
  return guarded([&] {
    *out = new swipt_config{swipt::ingest_config_file(path, preset ? preset : "")};
  });
}

int swipt_config_parse(const char* text, const char* preset, swipt_config** out) {
  if (!text || !out) return bad_argument("text and out must not be null");
  return guarded([&] {
    *out = new swipt_config{swipt::ingest_config_text(text, preset ? preset : "")};
  });
}

int swipt_config_out_path(const swipt_config* cfg, const char** path) {
  if (!cfg || !path) return bad_argument("cfg and path must not be null");
  *path = cfg->cfg.out.c_str();
  return SWIPT_OK;
}

void swipt_config_free(swipt_config* cfg) { delete cfg; }

int swipt_run(const swipt_config* cfg, int command, char** output, int* verdict) {
  if (!cfg || !output) return bad_argument("cfg and output must not be null");
  if (command < SWIPT_CMD_REGION || command > SWIPT_CMD_VERIFY) return bad_argument("unknown command");
  *output = nullptr;
  if (verdict) *verdict = 0;
  return guarded([&] {
    std::string text;
    bool ok = true;
    switch (command) {
      case SWIPT_CMD_REGION: text = swipt::cmd_region(cfg->cfg); break;
      case SWIPT_CMD_SUMRATE: text = swipt::cmd_sumrate(cfg->cfg); break;
      case SWIPT_CMD_COOP: text = swipt::cmd_coop(cfg->cfg); break;
      case SWIPT_CMD_VERIFY: {
        const auto v = swipt::cmd_verify(cfg->cfg);
        text = v.report;
        ok = v.pass;
        break;
      }
      default: break;
    }
    *output = copy_string(text);
    if (verdict) *verdict = ok ? 1 : 0;
  });
}

void swipt_string_free(char* s) { std::free(s); }

int swipt_sumrate(const swipt_config* cfg, double* rho, double* sum_rate) {
  if (!cfg || !rho || !sum_rate) return bad_argument("null argument");
  return guarded([&] {
    const auto& c = cfg->cfg;
    swipt::SolveReport rep;
    if (c.scenario == swipt::Scenario::kClassicalSimul) {
      rep = swipt::sumrate_simultaneous(c.classical);
    } else if (c.scenario == swipt::Scenario::kClassicalSic) {
      rep = swipt::sic_sumrate_numeric(c.classical);
    } else {
      throw swipt::Error(swipt::ErrorCode::kDomain, "sum rate needs a classical scenario");
    }
    *rho = rep.rho;
    *sum_rate = rep.sum_rate;
  });
}

int swipt_eh_logistic(double q1, double q2, double p_max_dc, swipt_eh** out) {
  if (!out) return bad_argument("out must not be null");
  return guarded([&] { *out = new swipt_eh{swipt::EhModel::logistic(q1, q2, p_max_dc)}; });
}

int swipt_eh_linear(double eta, swipt_eh** out) {
  if (!out) return bad_argument("out must not be null");
  return guarded([&] { *out = new swipt_eh{swipt::EhModel::linear(eta)}; });
}

int swipt_eh_eval(const swipt_eh* eh, double p_in, double* p_dc) {
  if (!eh || !p_dc) return bad_argument("null argument");
  return guarded([&] { *p_dc = eh->model.eval(p_in); });
}

int swipt_eh_inverse(const swipt_eh* eh, double p_dc, double* p_in) {
  if (!eh || !p_in) return bad_argument("null argument");
  return guarded([&] { *p_in = eh->model.inverse(p_dc); });
}

void swipt_eh_free(swipt_eh* eh) { delete eh; }

int swipt_cost_create(const char* family, double param, swipt_cost** out) {
  if (!family || !out) return bad_argument("null argument");
  const std::string f(family);
  if (f != "exp" && f != "log" && f != "lin" && f != "const") {
    return bad_argument("unknown cost family");
  }
  return guarded([&] {
    if (f == "exp") {
      *out = new swipt_cost{swipt::CostModel::exponential(param)};
    } else if (f == "log") {
      *out = new swipt_cost{swipt::CostModel::logarithmic(param)};
    } else if (f == "lin") {
      *out = new swipt_cost{swipt::CostModel::linear(param)};
    } else {
      *out = new swipt_cost{swipt::CostModel::constant(param)};
    }
  });
}

int swipt_cost_eval(const swipt_cost* cost, double rate, double* power) {
  if (!cost || !power) return bad_argument("null argument");
  return guarded([&] { *power = cost->model.eval(rate); });
}

int swipt_cost_inverse(const swipt_cost* cost, double power, double* rate, int* unbounded) {
  if (!cost || !rate || !unbounded) return bad_argument("null argument");
  return guarded([&] {
    const auto rb = cost->model.inverse(power);
    *rate = rb.value;
    *unbounded = rb.unbounded ? 1 : 0;
  });
}

void swipt_cost_free(swipt_cost* cost) { delete cost; }

}  // extern "C"
