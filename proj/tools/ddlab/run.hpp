#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "config.hpp"

namespace ddlab::app {

inline constexpr std::string_view tool_version = "0.3.0";

enum ExitCode : int { exit_ok = 0, exit_config = 1, exit_numeric = 2, exit_check_failed = 3 };

// Runs one experiment and writes its artifacts into out_dir (created if
// missing). Returns exit_ok, or exit_check_failed when `check` finds a failing
// invariant. Library errors (ddlab::Error) propagate to the caller. Progress
// and timings go to `log`, never into the artifacts.
int run(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace ddlab::app
