#pragma once

#include <string>
#include <vector>

namespace kcont {

// Exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitAudit = 3;
inline constexpr int kExitSolver = 4;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitIo = 74;

/// Scenario runner behind the CLI: eigen | trace | solve-p1 | theorem-c | validate.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace kcont
