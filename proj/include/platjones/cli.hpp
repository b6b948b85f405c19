#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace platjones::cli {

enum class Mode { Exact, Sampled, Compare, CircuitInfo };
enum class Format { Json, Csv, Text };

struct RunConfig {
  Mode mode = Mode::Exact;
  int k = 0;
  std::optional<std::string> braid_text;
  std::optional<std::string> braid_file;
  double delta = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  int trials = 1;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAdmissibility = 2;
constexpr int kExitSizeGuard = 3;

/// Runs one configuration; never throws. Errors come back as a structured
/// object {"error": {"code", "message", "position"}} with a nonzero exit.
RunResult run(const RunConfig& config);

/// Parses argv and runs. Output goes to `output` of the result.
RunResult run_args(const std::vector<std::string>& args);

}  // namespace platjones::cli
