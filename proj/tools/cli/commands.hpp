#pragma once

#include "config.hpp"
#include "output.hpp"

namespace fdqpt::cli {

/// Largest analytic-vs-oracle deviation tolerated by oracle-check.
inline constexpr double kOracleTolerance = 1e-7;

struct CommandResult {
    Table table;
    int exit_code = 0;
};

// Each command throws fdqpt::Error for numerical guards it cannot absorb.
CommandResult cmd_retprob(const RunConfig& cfg);
CommandResult cmd_rate(const RunConfig& cfg);
CommandResult cmd_fisher(const RunConfig& cfg);
CommandResult cmd_geo(const RunConfig& cfg);
CommandResult cmd_winding(const RunConfig& cfg);
CommandResult cmd_topo(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_oracle_check(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandResult run_command(const RunConfig& cfg);

}  // namespace fdqpt::cli
