#ifndef SWIPT_MAC_H
#define SWIPT_MAC_H

/* C interface to the PS-SWIPT MAC solvers. Every function returns a status
 * code; SWIPT_OK is 0. The message for the last failure on the calling thread
 * is available from swipt_last_error(). */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SWIPT_MAC_BUILDING)
#    define SWIPT_API __declspec(dllexport)
#  else
#    define SWIPT_API __declspec(dllimport)
#  endif
#else
#  define SWIPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum swipt_status {
  SWIPT_OK = 0,
  SWIPT_E_DOMAIN = 1,
  SWIPT_E_SATURATION = 2,
  SWIPT_E_NO_INVERSE = 3,
  SWIPT_E_BRACKET = 4,
  SWIPT_E_EVALUATION = 5,
  SWIPT_E_SINGULAR = 6,
  SWIPT_E_INFEASIBLE = 7,
  SWIPT_E_PARSE = 8,
  SWIPT_E_IO = 9,
  SWIPT_E_INTERNAL = 10,
  SWIPT_E_ARGUMENT = 11
};

enum swipt_command {
  SWIPT_CMD_REGION = 0,
  SWIPT_CMD_SUMRATE = 1,
  SWIPT_CMD_COOP = 2,
  SWIPT_CMD_VERIFY = 3
};

typedef struct swipt_config swipt_config;
typedef struct swipt_eh swipt_eh;
typedef struct swipt_cost swipt_cost;

SWIPT_API const char* swipt_version(void);
SWIPT_API const char* swipt_status_string(int status);
SWIPT_API const char* swipt_last_error(void);

/* Run configuration: `key = value` text, optionally layered over a preset. */
SWIPT_API int swipt_config_load(const char* path, const char* preset, swipt_config** out);
SWIPT_API int swipt_config_parse(const char* text, const char* preset, swipt_config** out);
SWIPT_API int swipt_config_out_path(const swipt_config* cfg, const char** path);
SWIPT_API void swipt_config_free(swipt_config* cfg);

/* Runs a subcommand. *output is a NUL-terminated string released with
 * swipt_string_free. *verdict is 1 for PASS (verify) or success, 0 otherwise. */
SWIPT_API int swipt_run(const swipt_config* cfg, int command, char** output, int* verdict);
SWIPT_API void swipt_string_free(char* s);

/* Optimal sum rate of a classical configuration. */
SWIPT_API int swipt_sumrate(const swipt_config* cfg, double* rho, double* sum_rate);

/* Energy-harvesting models. */
SWIPT_API int swipt_eh_logistic(double q1, double q2, double p_max_dc, swipt_eh** out);
SWIPT_API int swipt_eh_linear(double eta, swipt_eh** out);
SWIPT_API int swipt_eh_eval(const swipt_eh* eh, double p_in, double* p_dc);
SWIPT_API int swipt_eh_inverse(const swipt_eh* eh, double p_dc, double* p_in);
SWIPT_API void swipt_eh_free(swipt_eh* eh);

/* Decoding-cost models; family is one of "exp", "log", "lin", "const" and
 * param is beta (or phi0 for "const"). */
SWIPT_API int swipt_cost_create(const char* family, double param, swipt_cost** out);
SWIPT_API int swipt_cost_eval(const swipt_cost* cost, double rate, double* power);
/* *unbounded is set to 1 when no finite rate is limited by the power. */
SWIPT_API int swipt_cost_inverse(const swipt_cost* cost, double power, double* rate,
                                 int* unbounded);
SWIPT_API void swipt_cost_free(swipt_cost* cost);

#ifdef __cplusplus
}
#endif

#endif
