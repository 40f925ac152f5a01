// commands.hpp: the nmswitch subcommands. Each writes its CSV into
// cfg.output_dir, prints a summary to out and returns the exit status.
// Scenario mismatches throw ConfigError (exit 2 in the tool).

#pragma once

#include <ostream>

#include "nmswitch/cli/run_config.hpp"

namespace nmswitch::cli {

int cmd_backflow(const RunConfig& cfg, std::ostream& out);
int cmd_rates(const RunConfig& cfg, std::ostream& out);
int cmd_divisibility(const RunConfig& cfg, std::ostream& out);

enum class Figure { Distance, Rates, All };
int cmd_reproduce(const RunConfig& cfg, Figure figure, std::ostream& out);

/// inject_fault perturbs the closed-form A(t) so the oracle check must fail.
int cmd_selftest(const RunConfig& cfg, std::ostream& out, bool inject_fault = false);

} // namespace nmswitch::cli
