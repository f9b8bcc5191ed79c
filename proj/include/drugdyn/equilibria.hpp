#pragma once

#include <optional>
#include <vector>

#include "drugdyn/dynamics.hpp"
#include "drugdyn/params.hpp"

namespace drugdyn {

enum class EquilibriumKind { Origin, Axis1, Axis2, Interior };

struct Equilibrium {
  EquilibriumKind kind = EquilibriumKind::Origin;
  ReducedState location;
  // Feasibility is reported in two independent pieces so that a candidate
  // with a negative component can be told apart from one that merely exceeds
  // the population size.
  bool nonnegative = false;         // d1 >= 0 and d2 >= 0
  bool within_population = false;   // d1 + d2 <= N
  bool feasible = false;            // both of the above
};

struct EquilibriumSet {
  std::vector<Equilibrium> points;
  bool degenerate = false;           // continuum of equilibria (singular, consistent)
  bool interior_inconsistent = false;  // singular and inconsistent: no interior point
};

// Closed-form axis fixed points (r1 N / a11, 0) and (0, r2 N / a22). A point
// is omitted (not an error) when its a_ii is zero, i.e. when the matching
// influence rate is zero.
std::vector<Equilibrium> axis_equilibria(const LVCoefficients& c);

struct InteriorResult {
  enum class Kind { Point, NoSolution, Continuum } kind = Kind::NoSolution;
  std::optional<Equilibrium> point;
};

// Solves a11 D1 + a12 D2 = r1 N, a21 D1 + a22 D2 = r2 N in closed form.
// |det| <= 1e-12 * max(|a11 a22|, |a12 a21|) counts as singular; a singular
// consistent system is a continuum, a singular inconsistent one has no
// interior point. Infeasible candidates are reported, not suppressed.
InteriorResult interior_equilibrium(const LVCoefficients& c);

// Origin + axis points + interior candidate, with coincident points (within
// 1e-9 * N) deduplicated, keeping the higher-precedence kind
// (Origin > Axis > Interior).
EquilibriumSet find_equilibria(const LVCoefficients& c);

const char* to_string(EquilibriumKind kind);

}  // namespace drugdyn
