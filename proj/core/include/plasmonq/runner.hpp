#pragma once

#include <filesystem>

#include "plasmonq/config.hpp"

namespace plasmonq {

/// Files written by a run, all inside the configured output directory.
struct RunArtifacts {
  std::filesystem::path data_csv;
  std::filesystem::path summary_json;
  std::filesystem::path resolved_config_json;
};

/// Executes a scenario: evaluates the scan, writes the CSV data file, the
/// JSON summary, and the re-runnable resolved config. Output is ordered by
/// grid index and byte-reproducible for a fixed config.
RunArtifacts run(const RunConfig& config);

}  // namespace plasmonq
