#pragma once

#include <string>
#include <vector>

#include "drugdyn/config.hpp"

namespace drugdyn {

// Named output documents produced by a subcommand. Contents are final bytes;
// nothing in them depends on the clock, the environment or thread scheduling.
struct Artifact {
  std::string name;
  std::string bytes;
};

struct Artifacts {
  std::vector<Artifact> files;

  const Artifact* find(const std::string& name) const {
    for (const auto& f : files)
      if (f.name == name) return &f;
    return nullptr;
  }
};

struct RunOverrides {
  int normalized = -1;  // -1: per config, 0/1: force
  int jobs = 1;         // sweep cells evaluated on this many threads
};

// Subcommand bodies. Each parses/validates the config, runs the work and
// returns the artifact set; errors are thrown as drugdyn::Error.
Artifacts run_analyze(const std::string& config_json, const RunOverrides& ov = {});
Artifacts run_simulate(const std::string& config_json, const RunOverrides& ov = {});
Artifacts run_portrait(const std::string& config_json, const RunOverrides& ov = {});
Artifacts run_sweep(const std::string& config_json, const RunOverrides& ov = {});

// Reference-value verification against the published simulation study.
// `all_must_match` reports whether every must-match item agreed; known
// discrepancies are flagged in the report and do not clear it.
Artifacts run_verify_paper(bool* all_must_match = nullptr);

// Output directory named by a config document (for callers that place the
// artifact files).
std::string config_output_directory(const std::string& config_json);

}  // namespace drugdyn
