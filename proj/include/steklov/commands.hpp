#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace steklov::cli {

enum class OutputFormat { Json, Csv };

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kPropertyViolation = 1,
    kInvalidInput = 2,
    kNumericalFailure = 3,
};

struct RunConfig {
    std::string command;
    int n = 3;
    double r1 = 1.0;
    double r2 = 1.0;
    double length = 1.0;
    int grid = 2001;
    bool grid_given = false;  // spectrum defaults to the profile's native grid
    int modes = 8;
    std::uint64_t seed = 0;
    int trials = 100;
    std::vector<double> epsilon_list{0.2, 0.1, 0.05, 0.02};
    double tol = 1e-10;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    std::string profile_path;  // spectrum input
    std::string kind = "tent";  // profile generator: annulus | tent | random | sharpness
    double epsilon = 0.0;       // profile generator corner/sharpness parameter
};

/// Result of one command: a JSON document plus a CSV rendering of the main
/// table. `message` goes to stderr (diagnostics, error text).
struct CommandResult {
    int exit_code = kSuccess;
    nlohmann::json document;
    std::string csv;
    std::string message;
};

CommandResult cmd_bound(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_sharpness(const RunConfig& cfg);
CommandResult cmd_lstar(const RunConfig& cfg);
/// Writes a generated profile in the `r,h` CSV format (into `csv`).
CommandResult cmd_profile(const RunConfig& cfg);

/// Runs cfg.command, translating library exceptions into exit codes
/// (invalid input -> 2, numerical failure -> 3).
CommandResult run(const RunConfig& cfg);

/// Text that the command writes to its output: canonical JSON, or CSV.
std::string render(const CommandResult& result, OutputFormat format);

/// Resolves the output path against $STEKLOV_OUTPUT_DIR when it is relative.
std::string resolve_output_path(const std::string& path);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace steklov::cli
