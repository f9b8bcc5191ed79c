#pragma once

#include <vector>

#include "drugdyn/equilibria.hpp"
#include "drugdyn/params.hpp"
#include "drugdyn/stability.hpp"

namespace drugdyn {

// Qualitative outcome of the competition, decided purely by which feasible
// equilibria are stable (never by ad-hoc parameter inequalities).
enum class RegimeClass {
  Extinction,             // only the origin is stable: both drugs die out
  Exclusion1,             // drug 1 takes over
  Exclusion2,             // drug 2 takes over
  BistableExclusion,      // either drug can win, depending on initial data
  Coexistence,            // a feasible stable interior point exists
  Degenerate,             // continuum of equilibria
  NonHyperbolicBoundary,  // some relevant point is non-hyperbolic
};

struct AnalysisResult {
  ValidatedParameters params;
  std::vector<SpecialCase> special_cases;
  LVCoefficients coeffs;
  OriginAnalysis origin;
  EquilibriumSet equilibria;
  std::vector<StabilityReport> stability;  // parallel to equilibria.points
  RegimeClass regime = RegimeClass::NonHyperbolicBoundary;
};

RegimeClass classify_regime(const EquilibriumSet& eqs,
                            const std::vector<StabilityReport>& reports);

// The full closed-form pipeline: coefficients, equilibria, per-point
// stability, origin shortcut, regime.
AnalysisResult analyze(const ValidatedParameters& p,
                       std::vector<SpecialCase> special_cases = {});

const char* to_string(RegimeClass r);

}  // namespace drugdyn
