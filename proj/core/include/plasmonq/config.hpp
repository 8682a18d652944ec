#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "plasmonq/experiment.hpp"
#include "plasmonq/source.hpp"
#include "plasmonq/stats.hpp"

namespace plasmonq {

enum class Scenario { chsh_scan, fringes, spbs_characterize, visibility_vs_theta };
enum class SamplingMode { analytic, monte_carlo };

struct SamplingSpec {
  SamplingMode mode{SamplingMode::analytic};
  double mean_heralds{1000.0};
  std::uint64_t seed{12345};
};

struct OutputSpec {
  std::string dir{"out"};
  std::string prefix{};  // empty resolves to the scenario name
};

struct SourceConfig {
  PairSourceSpec pair{};
  double gamma_cap{kDefaultGammaCap};

  /// Effective indistinguishability: the cap scaled by the Bell-delay
  /// overlap.
  double effective_gamma() const;
};

/// One fully resolved run. Every field has a default; loading fills the
/// defaults and echoes the resolved document back for provenance.
struct RunConfig {
  Scenario scenario{Scenario::fringes};
  SourceConfig source{};
  MzSpec mz{};
  double theta_deg{45.0};
  ChshSetting angles{};
  ScanGrid scan{};
  bool scan_given{false};
  SamplingSpec sampling{};
  OutputSpec output{};

  std::string resolved_prefix() const;
};

std::string to_string(Scenario scenario);

/// Parses and validates a config document. Unknown keys are rejected by
/// name; out-of-range values are rejected naming the field and the legal
/// range. Throws ConfigError.
RunConfig parse_config(const std::string& json_text,
                       const std::string& origin = "<string>");

/// Loads a UTF-8 JSON config file. Parse errors carry line and column.
RunConfig load_config(const std::filesystem::path& path);

/// Serializes the resolved config; parse_config(resolved_config_json(c))
/// round-trips exactly.
std::string resolved_config_json(const RunConfig& config);

}  // namespace plasmonq
