#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drugdyn/integrator.hpp"
#include "drugdyn/params.hpp"
#include "drugdyn/portrait.hpp"

namespace drugdyn {

// One experiment = one JSON document. Top-level keys: "parameters" (required),
// "simulation", "portrait", "sweep", "output". Unknown keys anywhere are
// rejected. Parameter keys are beta1, beta2, gamma1, gamma2, delta1, delta2,
// alpha1, alpha2, mu, N.

struct SimulationConfig {
  // Initial states per tier, each a list of state vectors
  // (full: [S,D1,D2,R1,R2], exact4: [D1,D2,R1,R2], reduced: [D1,D2]).
  std::vector<std::pair<Tier, std::vector<std::vector<double>>>> initial;
  IntegratorOptions options;

  bool tier_requested(Tier t) const {
    for (const auto& [tier, states] : initial)
      if (tier == t && !states.empty()) return true;
    return false;
  }
};

struct PortraitConfig {
  std::optional<Window> window;  // default [0, N] x [0, N]
  int grid_m = 5;
  IntegratorOptions options;
};

struct SweepAxis {
  std::string name;  // one of the nine rate names
  double min = 0.0;
  double max = 0.0;
  int steps = 0;  // >= 2
};

struct SweepConfig {
  std::vector<SweepAxis> axes;  // 1 or 2
  std::optional<bool> heatmap;  // default: emit for 2-axis sweeps
};

struct OutputConfig {
  std::string directory = ".";
  std::vector<std::string> formats;  // subset of {json, txt, csv, svg}; empty = all
  bool normalized = false;           // divide person-valued outputs by N
};

struct RunConfig {
  ModelParameters parameters;
  std::optional<SimulationConfig> simulation;
  std::optional<PortraitConfig> portrait;
  std::optional<SweepConfig> sweep;
  OutputConfig output;
};

// Parses and validates a config document. Throws Error(Validation) listing
// every problem found (unknown keys, wrong types, out-of-range values).
RunConfig parse_config(const std::string& json_text);

// Applies a swept value to a named rate. Throws Error(Validation) for an
// unknown axis name.
void set_rate(ModelParameters& p, const std::string& name, double value);

}  // namespace drugdyn
