#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "swipt_mac.h"

int main(int argc, char** argv) {
  CLI::App app{"Rate regions, sum rates and cooperative power allocation for PS-SWIPT MACs"};
  app.require_subcommand(1);

  std::string config;
  std::string preset;
  std::string out;
  int command = SWIPT_CMD_REGION;

  struct Sub {
    const char* name;
    const char* help;
    int command;
  };
  const Sub subs[] = {
      {"region", "write the rate-region boundary as CSV", SWIPT_CMD_REGION},
      {"sumrate", "sweep the sum rate over the PS factor", SWIPT_CMD_SUMRATE},
      {"coop", "solve the cooperative weighted sum rate per weight pair", SWIPT_CMD_COOP},
      {"verify", "compare the optimisers against brute-force oracles", SWIPT_CMD_VERIFY},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config, "key = value configuration file")->required();
    sub->add_option("--preset", preset, "fig3a..fig3d, fig4a, fig4b, fig5a..fig5d");
    sub->add_option("--out", out, "output path (defaults to the config's `out`, else stdout)");
    const int cmd = s.command;
    sub->callback([&command, cmd] { command = cmd; });
  }
  CLI11_PARSE(app, argc, argv);

  swipt_config* cfg = nullptr;
  int rc = swipt_config_load(config.c_str(), preset.empty() ? nullptr : preset.c_str(), &cfg);
  if (rc != SWIPT_OK) {
    std::cerr << "error: " << swipt_status_string(rc) << ": " << swipt_last_error() << "\n";
    return 2;
  }
  char* text = nullptr;
  int verdict = 0;
  rc = swipt_run(cfg, command, &text, &verdict);
  if (rc != SWIPT_OK) {
    std::cerr << "error: " << swipt_status_string(rc) << ": " << swipt_last_error() << "\n";
    swipt_config_free(cfg);
    return 2;
  }
  if (out.empty() && command != SWIPT_CMD_VERIFY) {
    const char* path = nullptr;
    swipt_config_out_path(cfg, &path);
    if (path) out = path;
  }
  swipt_config_free(cfg);

  int status = 0;
  if (out.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "error: cannot write " << out << "\n";
      status = 2;
    }
  }
  swipt_string_free(text);
  if (command == SWIPT_CMD_VERIFY && !verdict) status = 1;
  return status;
}
