#pragma once
// Command implementations behind the CLI verbs. Each writes its result file
// to cfg.output_path and returns the process exit code: 0 ok, 2 numerical
// failure. Config errors throw std::invalid_argument (exit code 1 in main).

#include "pubcomm/run_config.hpp"

namespace pubcomm {

int cmd_solve(const RunConfig& cfg);
int cmd_figure(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);

}  // namespace pubcomm
