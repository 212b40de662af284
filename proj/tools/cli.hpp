#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invset::cli {

enum class Command { Niven, Counterfactual, Superpose, Chsh, Sweep, Bits, Padic, Validate };
enum class OutputFormat { Json, Csv, Plain };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

[[nodiscard]] std::string_view to_string(Command c);
[[nodiscard]] std::optional<Command> command_from_string(std::string_view name);

/// A fully parsed invocation. Numeric parameters stay as the exact strings
/// the user typed; they are converted to rationals only at dispatch.
struct RunConfig {
  Command command = Command::Niven;
  std::map<std::string, std::string> params;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  bool meta = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string payload;
};

/// Parses command-line words (without the program name). Throws
/// invset::ParseError on usage errors. `help` receives --help text and is
/// set when help was requested.
[[nodiscard]] RunConfig parse_args(const std::vector<std::string>& args, std::optional<std::string>* help = nullptr);

/// Dispatches to the library and renders the report. Never writes files.
[[nodiscard]] RunResult execute(const RunConfig& config);

/// parse_args + execute + output routing; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Which subcommand invocation reaches each library operation.
struct CoverageEntry {
  std::string operation;
  std::vector<std::string> example_args;
};
[[nodiscard]] const std::vector<CoverageEntry>& operation_coverage();

/// Reads `key = value` lines (# comments, blank lines ignored).
[[nodiscard]] std::map<std::string, std::string> read_config_file(const std::string& path);

}  // namespace invset::cli
