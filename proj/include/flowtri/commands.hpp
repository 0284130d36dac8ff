#pragma once

// Report-producing commands behind the flowtri executable.

#include <cstdint>
#include <optional>
#include <string>

#include "flowtri/serialize.hpp"

namespace flowtri {

struct CommandInputs {
  std::string graph;                         // JSON graph text
  std::optional<std::string> decomposition;  // JSON decomposition text
  std::optional<std::string> embedding;      // JSON embedding text
};

struct CommandOptions {
  bool exhaustive_dkk = false;
  std::int64_t exhaustive_bound = 1'000'000;
  int max_dilate = 4;
  bool timings = false;
  std::uint64_t seed = 1;
  int count = 200;
  int max_edges = 8;
};

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 success, 1 failed check or unbalanced graph, 2 invalid input
};

CommandResult cmd_analyze(const CommandInputs& in, const CommandOptions& opt);
CommandResult cmd_decompose(const CommandInputs& in, const CommandOptions& opt);
CommandResult cmd_dkk(const CommandInputs& in, const CommandOptions& opt);
CommandResult cmd_equatorial(const CommandInputs& in, const CommandOptions& opt);
CommandResult cmd_quotient(const CommandInputs& in, const CommandOptions& opt);
CommandResult cmd_order(const CommandInputs& in, const CommandOptions& opt);
/// Random sweep seeded by opt.seed; ignores in.graph.
CommandResult cmd_fuzz(const CommandInputs& in, const CommandOptions& opt);

/// Dispatches by subcommand name; unknown names give exit code 2.
CommandResult run_command(const std::string& name, const CommandInputs& in, const CommandOptions& opt);

/// One "key: value" line per scalar or array, nested keys joined with '.'.
std::string render_text(const Json& report);

}  // namespace flowtri
