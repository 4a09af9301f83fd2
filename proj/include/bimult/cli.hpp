#pragma once

#include <string>
#include <vector>

namespace bimult {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;       // config parse/validation errors
constexpr int kExitCheckFailed = 3;  // numerical check reported failure
constexpr int kExitRuntime = 4;      // evaluation failed at runtime

/// Executes the op named in the config file, writes the report, and returns
/// the exit code.
int run_command(const std::string& config_path);

/// Times the serial and parallel apply_C paths over a size sweep and writes
/// a timing report; fails (exit 3) when the parallel path is not at least
/// 4x faster at N = 1024 or the paths disagree beyond 1e-10.
int bench_command(const std::string& config_path);

int list_symbols_command();
int list_checks_command();

/// op ids accepted by run_command, with one-line descriptions.
std::vector<std::pair<std::string, std::string>> check_catalogue();

}  // namespace bimult
