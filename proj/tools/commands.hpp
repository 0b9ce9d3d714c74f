#pragma once

#include <filesystem>
#include <string>

#include "sdelab/config.hpp"

namespace sdelab::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kValidation = 2,
  kCheckFailed = 3,
  kNonConvergence = 4,
};

struct RunContext {
  ExperimentConfig config;
  std::filesystem::path out_dir;
  unsigned workers = 0;
  bool timing = false;
};

int cmd_besov(const RunContext& ctx);
int cmd_yw(const RunContext& ctx);
int cmd_pde(const RunContext& ctx);
int cmd_simulate(const RunContext& ctx);
int cmd_rate_study(const RunContext& ctx);

// Dispatches on run.command, writes run.manifest first.
int run_command(const std::string& command, const RunContext& ctx);

}  // namespace sdelab::cli
