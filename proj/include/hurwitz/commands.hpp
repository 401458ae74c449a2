// Subcommands of the hzcodes tool. Each writes its report to `out` and
// diagnostics to `err`, and returns the process exit code.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "hurwitz/config.hpp"

namespace hurwitz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<OutputFormat> format;
  bool exhaustive = false;
  /// Vector for decode, message for encode.
  std::string input;
  std::string fixtures_dir;
  /// simulate: "in-class", "none" or "triple".
  std::string channel = "in-class";
  /// verify: name of a check to sabotage ("field-tables"), for negative tests.
  std::string inject_fault;
};

int run_inspect(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err);
int run_encode(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int run_decode(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int run_verify(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int run_simulate(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                 std::ostream& err);

/// Loads the config at `path` and runs `command` ("inspect", "encode",
/// "decode", "verify" or "simulate"), mapping parse errors to kExitUsage.
int run_command(const std::string& command, const std::string& path,
                const CommandOptions& options, std::ostream& out, std::ostream& err);

std::string default_fixtures_dir();

}  // namespace hurwitz
