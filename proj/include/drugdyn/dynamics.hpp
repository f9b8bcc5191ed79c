#pragma once

#include <array>
#include <utility>

#include "drugdyn/params.hpp"

namespace drugdyn {

// Full five-compartment state. Components in persons, ordered S, D1, D2, R1, R2.
struct PopulationState {
  double s = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// Four-dimensional state after eliminating S = N - (D1 + D2 + R1 + R2).
struct Exact4State {
  double d1 = 0.0;
  double d2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// Reduced two-dimensional state: just the two addicted groups.
struct ReducedState {
  double d1 = 0.0;
  double d2 = 0.0;
};

// Right-hand side of the full model, persons/year, ordered like
// PopulationState. The five components sum to mu * (N - S - D1 - D2 - R1 - R2),
// so total population is conserved on the constraint manifold.
std::array<double, 5> full_rhs(const ValidatedParameters& p, const PopulationState& x);

// Right-hand side of the four-dimensional system, algebraically identical to
// full_rhs restricted to the manifold S = N - (D1 + D2 + R1 + R2).
std::array<double, 4> exact4_rhs(const ValidatedParameters& p, const Exact4State& x);

// Steady values of the recovered groups given the addicted groups:
// R_i = gamma_i D_i / (delta_i + mu). Returns (R1, R2) in persons.
std::pair<double, double> qss_recovered(const ValidatedParameters& p, const ReducedState& d);

// Right-hand side of the reduced competition system,
// dD_i/dt = D_i (r_i - (a_i1 D1 + a_i2 D2)/N). The axes are exactly
// invariant: D_i == 0 forces component i to be exactly zero.
std::array<double, 2> reduced_rhs(const LVCoefficients& c, const ReducedState& d);

}  // namespace drugdyn
