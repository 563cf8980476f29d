#pragma once

// Entry point of the advkit command line, callable in-process so tests can
// drive it with string arguments.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace advkit::cli {

enum ExitCode : int { kSuccess = 0, kCounterexample = 1, kUsageError = 2 };

enum class Format { csv, json, text };

struct RunConfig {
  std::vector<std::string> command;
  double tol = 1e-4;
  std::uint64_t seed = 42;
  std::vector<std::filesystem::path> inputs;
  std::optional<std::filesystem::path> output;
  Format format = Format::csv;
};

/// `args` excludes the program name. Normal output goes to `out` (or to the
/// --out file), diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace advkit::cli
