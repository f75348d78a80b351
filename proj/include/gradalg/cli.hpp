#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/io.hpp"

namespace gradalg::cli {

enum ExitCode { kPass = 0, kVerdictFail = 1, kSchemaError = 2, kConsistencyError = 3 };

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::size_t exhaustive_dim = 4;
  int max_root_order = 240;
  std::optional<std::string> task;
  io::json args = io::json::object();  // entity selections from flags; override task args
};

const std::vector<std::string>& commands();
// Query commands answer with a verdict in the report and exit 0 either way.
bool is_query(const std::string& command);

struct Result {
  io::json report;
  int exit_code = kPass;
};
// Runs every workspace task for `command` (or one task built from the flags).
// Throws SchemaError / ConsistencyError / DomainError.
Result run_command(const std::string& command, const io::Workspace& w, const Options& opt);

// Full command line: parses flags, loads the workspace, writes the report, maps errors to exit codes.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gradalg::cli
