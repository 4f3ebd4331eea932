#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charwave/config.hpp"

namespace charwave {

// Everything a run produces, composed in memory so determinism is testable
// without touching the filesystem: identical configs yield byte-identical
// file sets. files carries (relative path, bytes) including report.json and
// history.json; write_outcome materializes them under an output directory.
struct RunOutcome {
  nlohmann::ordered_json report;
  std::vector<std::pair<std::string, std::string>> files;
};

RunOutcome execute(const RunConfig& config);

void write_outcome(const std::string& outdir, const RunOutcome& outcome);

// Full command-line entry point (subcommands run / reproduce / verify /
// sweep); returns the process exit code per the stable contract: 0 success,
// 2 config, 3 invariant, 4 non-convergence, 5 I/O.
int run_cli(int argc, const char* const* argv);

}  // namespace charwave
