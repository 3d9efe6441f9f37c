#pragma once

#include <string>

#include "zbw/config.hpp"

namespace zbw {

/// Written artifacts of one scenario run; the exact bytes are returned so the
/// determinism contract can be asserted without re-reading the files.
struct ScenarioArtifacts {
  std::string csv_path;
  std::string json_path;
  std::string csv_bytes;
  std::string json_bytes;
  bool verify_passed = true;  // meaningful for the verify scenario only
};

/// Runs the configured scenario and writes CSV + JSON sidecar (or the verify
/// report) into config.output_dir. Identical configs produce byte-identical
/// outputs.
ScenarioArtifacts run_scenario(const ScenarioConfig& config);

}  // namespace zbw
