#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace antiramsey::cli {

enum class ExitCode : int {
  Ok = 0,
  DomainError = 1,
  UsageError = 2,
  InvariantViolation = 3,
};

struct CommandResult {
  ExitCode code = ExitCode::Ok;
  /// Subcommand payload on success, structured error otherwise.
  nlohmann::json payload;
  /// Payload rendered in the requested --format.
  std::string output;
  std::vector<std::string> diagnostics;

  [[nodiscard]] bool ok() const { return code == ExitCode::Ok; }
};

/// Parses `args` (without the program name) and runs one subcommand. `in`
/// supplies `--input -`. Never throws.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

/// Runs and writes output to `out` and diagnostics to `err`; returns the exit code.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace antiramsey::cli
