#pragma once

#include <array>
#include <complex>
#include <optional>

#include "drugdyn/dynamics.hpp"
#include "drugdyn/params.hpp"

namespace drugdyn {

struct Jacobian2 {
  double j11 = 0.0, j12 = 0.0, j21 = 0.0, j22 = 0.0;
  double trace() const { return j11 + j22; }
  double det() const { return j11 * j22 - j12 * j21; }
};

// Jacobian of the reduced system at a point:
//   J11 = r1 - (2 a11 d1 + a12 d2)/N        J12 = -a12 d1 / N
//   J21 = -a21 d2 / N                       J22 = r2 - (a21 d1 + 2 a22 d2)/N
// At the origin this is exactly diag(r1, r2); on an axis it is triangular.
Jacobian2 jacobian_at(const LVCoefficients& c, const ReducedState& d);

struct Eigen2 {
  std::complex<double> lambda1;  // larger real part first; for a real pair,
  std::complex<double> lambda2;  // larger magnitude first
  // Unit eigenvectors, present only when both eigenvalues are real. For a
  // repeated eigenvalue of a defective matrix both entries hold the single
  // eigendirection; for a multiple of the identity they are the two axes.
  std::optional<std::array<double, 2>> v1;
  std::optional<std::array<double, 2>> v2;
};

// Eigenvalues via the numerically stable quadratic formula (larger-magnitude
// root first, the other as det/lambda). Triangular input produces exactly the
// diagonal entries.
Eigen2 eigen2(const Jacobian2& j);

enum class StabilityClass {
  StableNode,
  UnstableNode,
  Saddle,
  StableSpiral,
  UnstableSpiral,
  Center,
  NonHyperbolicDegenerate,
};

struct StabilityReport {
  Eigen2 eigen;
  StabilityClass cls = StabilityClass::NonHyperbolicDegenerate;
  bool hyperbolic = false;
};

inline constexpr double kDefaultStabilityTol = 1e-9;  // 1/year

// Trace-determinant classification. A real eigenvalue within tol of zero
// makes the point NonHyperbolicDegenerate; a complex pair with |Re| <= tol is
// a Center. Saddle if and only if det < 0.
StabilityReport classify(const Jacobian2& j, double tol = kDefaultStabilityTol);

enum class OriginCase {
  StableNode,     // theta1 < mu and theta2 < mu
  UnstableNode,   // theta1 > mu and theta2 > mu
  Saddle,         // mixed
  NonHyperbolic,  // some theta_i within tol of mu
};

struct OriginAnalysis {
  double theta1 = 0.0;
  double theta2 = 0.0;
  OriginCase origin_case = OriginCase::NonHyperbolic;
};

// Shortcut classification of the drug-free state from theta_i alone. Shares
// the theta code path with reduced_coefficients(), so theta_i - mu equals
// r_i exactly and this always agrees with classify(jacobian_at(c, (0,0))).
OriginAnalysis origin_analysis(const ValidatedParameters& p,
                               double tol = kDefaultStabilityTol);

const char* to_string(StabilityClass cls);
const char* to_string(OriginCase c);

}  // namespace drugdyn
