#pragma once

#include <array>
#include <string>
#include <vector>

#include "drugdyn/analysis.hpp"
#include "drugdyn/integrator.hpp"

namespace drugdyn {

struct Window {
  double d1_min = 0.0, d1_max = 0.0;
  double d2_min = 0.0, d2_max = 0.0;
  double d1_span() const { return d1_max - d1_min; }
  double d2_span() const { return d2_max - d2_min; }
  bool empty() const { return !(d1_span() > 0.0) || !(d2_span() > 0.0); }
  bool contains(double d1, double d2, double margin = 0.0) const {
    return d1 >= d1_min - margin && d1 <= d1_max + margin && d2 >= d2_min - margin &&
           d2 <= d2_max + margin;
  }
};

enum class NullclineLabel { D1Axis, D2Axis, D1Interior, D2Interior };

struct NullclineSegment {
  NullclineLabel label;
  std::array<double, 2> from;
  std::array<double, 2> to;
};

enum class SeparatrixDirection { Unstable, Stable };

struct SeparatrixBranch {
  SeparatrixDirection direction;
  int sign = +1;  // which side of the saddle the branch was seeded on
  std::vector<std::array<double, 2>> points;
};

struct PhasePortrait {
  Window window;
  std::vector<NullclineSegment> nullclines;
  std::vector<std::string> notes;  // e.g. degenerate nullclines omitted
  AnalysisResult analysis;
  std::vector<SeparatrixBranch> separatrices;
  std::vector<Trajectory<2>> trajectories;
};

// The nullcline lines of the reduced system, clipped to the window:
// dD1/dt = 0 on d1 = 0 and on a11 d1 + a12 d2 = r1 N; dD2/dt = 0 on d2 = 0
// and on a21 d1 + a22 d2 = r2 N. An interior line whose coefficients both
// vanish is omitted with a note.
std::vector<NullclineSegment> nullclines(const LVCoefficients& c, const Window& window,
                                         std::vector<std::string>* notes = nullptr);

// Four half-branches of the saddle separatrix: forward from saddle +/- eps
// along the unstable eigendirection, backward (negated field) along the
// stable one, eps = 1e-4 * N, integrated until leaving the window (plus a
// small margin) or converging. Throws Error(Validation) if the point is not
// a hyperbolic saddle with real eigenvalues of opposite signs.
std::vector<SeparatrixBranch> separatrices(const LVCoefficients& c,
                                           const Equilibrium& saddle,
                                           const StabilityReport& report,
                                           const Window& window,
                                           const IntegratorOptions& opts);

// Trajectories from an m x m grid of initial conditions spanning the window
// corners inclusively (m == 1 uses the window centre), in row-major order.
// A StepFailure is recorded on its trajectory without aborting the bundle.
std::vector<Trajectory<2>> trajectory_bundle(const LVCoefficients& c,
                                             const Window& window, int m,
                                             const IntegratorOptions& opts);

PhasePortrait build_portrait(const AnalysisResult& analysis, const Window& window,
                             int grid_m, const IntegratorOptions& opts);

struct SvgStyle {
  int width = 820;
  int height = 640;
  bool normalized = false;  // divide tick labels by N
};

// Deterministic SVG 1.1 rendering: byte-identical output for identical
// inputs. Throws Error(Validation) on an empty window.
std::string render_svg(const PhasePortrait& portrait, const SvgStyle& style = {});

const char* to_string(NullclineLabel label);
const char* to_string(SeparatrixDirection d);

}  // namespace drugdyn
