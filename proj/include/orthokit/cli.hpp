#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "orthokit/matrix_io.hpp"
#include "orthokit/tolerance.hpp"

namespace orthokit::cli {

enum class Command { Symmetric, Canonical, Polar, Svd, Pca, Verify, Relations };

std::string_view to_string(Command command) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;
const std::vector<std::string>& command_names();

struct RunConfig {
  Command command = Command::Verify;
  std::filesystem::path input_path;
  std::filesystem::path output_dir = ".";
  ToleranceConfig tolerances;
  int output_precision = 17;
  MatrixFormat format = MatrixFormat::Csv;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int input_error = 2;
inline constexpr int numerical_error = 3;
}  // namespace exit_code

struct RunResult {
  int exit_status = exit_code::ok;
  /// Contents written to <output_dir>/report.json.
  nlohmann::json report;
  std::vector<std::filesystem::path> files_written;
};

/// Runs one command end to end: reads the input matrix, writes the factor
/// files `<command>_<factor>.<ext>` and `report.json` into output_dir.
/// Never throws for bad input or numerical failure; both are reported
/// through the exit status and the report's "error" object.
RunResult execute(const RunConfig& config);

inline int run(const RunConfig& config) { return execute(config).exit_status; }

}  // namespace orthokit::cli
